"""Truncated certification of topological-generation statements.

For a target group G and subgroups H_1..H_m, generation holds iff the
invariant vectors agree on every tensor word; the checker verifies
dim(Fix_{H_1} ∩ ... ∩ Fix_{H_m}) = dim Fix_G for every word up to a
length cutoff and reports per-word dimension tables.  A pass certifies
the statement *up to the cutoff only*: it is necessary evidence, never a
proof of full generation, while any failure disproves generation
outright.
"""

from __future__ import annotations

import hashlib
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from itertools import product
from typing import Iterator, Sequence

from .errors import CapExceeded, MemoryGuardExceeded
from .exact_linalg import dim_span, iterated_intersection_dim
from .fixed_spaces import GroupFamily, GroupSpec, fixed_space
from .realize import DEFAULT_ENTRY_GUARD
from .words import DEFAULT_WORD_CAP, Color, ColoredWord, parse_word

_SELF_DUAL_TARGETS = frozenset({GroupFamily.FREE_O, GroupFamily.CLASSICAL_O})


class WordFilter(Enum):
    ALL_COLORINGS = "all-colorings"
    UNCOLORED_ONLY = "uncolored-only"


@dataclass(frozen=True)
class GenerationTask:
    target: GroupSpec
    subgroups: tuple[GroupSpec, ...]
    max_len: int
    word_filter: WordFilter = WordFilter.ALL_COLORINGS

    def __post_init__(self):
        if not self.subgroups:
            raise ValueError("at least one subgroup is required")
        for H in self.subgroups:
            if H.N != self.target.N:
                raise ValueError("target and subgroups must share the dimension N")
        if self.max_len < 0:
            raise ValueError("max_len must be non-negative")
        if (
            self.target.family in _SELF_DUAL_TARGETS
            and self.word_filter is not WordFilter.UNCOLORED_ONLY
        ):
            raise ValueError(
                "orthogonal-type targets are self-dual; use the uncolored-only filter"
            )

    @property
    def N(self) -> int:
        return self.target.N

    def subgroup_labels(self) -> list[str]:
        labels = []
        seen: dict[str, int] = {}
        for H in self.subgroups:
            base = H.label()
            seen[base] = seen.get(base, 0) + 1
            labels.append(base if seen[base] == 1 else f"{base}#{seen[base]}")
        return labels

    def to_dict(self) -> dict:
        return {
            "target": self.target.label(),
            "subgroups": [H.label() for H in self.subgroups],
            "N": self.N,
            "max_len": self.max_len,
            "word_filter": self.word_filter.value,
        }


@dataclass
class WordRecord:
    word: str
    dims: dict[str, int]
    intersection: int | None
    target: int | None
    verdict: str  # pass | fail | skipped
    note: str = ""

    def to_dict(self) -> dict:
        out = {
            "word": self.word,
            "dims": self.dims,
            "intersection": self.intersection,
            "target": self.target,
            "verdict": self.verdict,
        }
        if self.note:
            out["note"] = self.note
        return out


@dataclass
class GenerationReport:
    task: GenerationTask
    words: list[WordRecord]
    overall: str  # pass | fail | incomplete
    counterexample: str | None
    skipped: list[str]
    timing_seconds: float = 0.0
    config_hash: str = field(default="", repr=False)

    def canonical_dict(self) -> dict:
        """Everything the verdict depends on; timing is excluded."""
        return {
            "task": self.task.to_dict(),
            "words": [r.to_dict() for r in self.words],
            "overall": self.overall,
            "counterexample": self.counterexample,
            "skipped": self.skipped,
        }

    def compute_hash(self) -> str:
        blob = json.dumps(self.canonical_dict(), sort_keys=True, separators=(",", ":"))
        return "sha256:" + hashlib.sha256(blob.encode()).hexdigest()

    def to_dict(self) -> dict:
        out = self.canonical_dict()
        out["config_hash"] = self.config_hash
        out["timing_seconds"] = self.timing_seconds
        return out

    def record_for(self, word: str) -> WordRecord | None:
        for r in self.words:
            if r.word == word:
                return r
        return None


def iter_words(max_len: int, word_filter: WordFilter) -> Iterator[ColoredWord]:
    """Words by length, then lexicographically with PLAIN before STAR."""
    for k in range(max_len + 1):
        if word_filter is WordFilter.UNCOLORED_ONLY:
            yield ColoredWord((Color.PLAIN,) * k)
        else:
            for letters in product((Color.PLAIN, Color.STAR), repeat=k):
                yield ColoredWord(letters)


def check_word(
    task: GenerationTask,
    word_text: str,
    cap: int = DEFAULT_WORD_CAP,
    entry_guard: int = DEFAULT_ENTRY_GUARD,
) -> WordRecord:
    """Dimension table and verdict for a single word."""
    w = parse_word(word_text)
    labels = task.subgroup_labels()
    try:
        sub_bases = [
            fixed_space(H, w, cap=cap, entry_guard=entry_guard)
            for H in task.subgroups
        ]
        dims = {lab: dim_span(B) for lab, B in zip(labels, sub_bases)}
        inter = iterated_intersection_dim(sub_bases)
        target_dim = dim_span(fixed_space(task.target, w, cap=cap, entry_guard=entry_guard))
    except (CapExceeded, MemoryGuardExceeded) as exc:
        return WordRecord(word_text, {}, None, None, "skipped", note=str(exc))
    if inter < target_dim:
        # Fix_G is contained in every Fix_H, so the intersection can never
        # be smaller; reaching this line means the fixed spaces are wrong.
        raise RuntimeError(
            f"soundness violation on word {word_text!r}: "
            f"intersection {inter} < target {target_dim}"
        )
    verdict = "pass" if inter == target_dim else "fail"
    return WordRecord(word_text, dims, inter, target_dim, verdict)


def _check_word_args(args) -> WordRecord:
    return check_word(*args)


def run_generation_check(
    task: GenerationTask,
    cap: int = DEFAULT_WORD_CAP,
    entry_guard: int = DEFAULT_ENTRY_GUARD,
    workers: int = 1,
) -> GenerationReport:
    """Check every word up to the task's cutoff and assemble the report."""
    if task.max_len > cap:
        raise CapExceeded(f"max_len {task.max_len} exceeds cap {cap}")
    t0 = time.perf_counter()
    words = [str(w) for w in iter_words(task.max_len, task.word_filter)]
    if workers > 1:
        args = [(task, wt, cap, entry_guard) for wt in words]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(_check_word_args, args))
    else:
        records = [check_word(task, wt, cap, entry_guard) for wt in words]
    counterexample = next((r.word for r in records if r.verdict == "fail"), None)
    skipped = [r.word for r in records if r.verdict == "skipped"]
    if counterexample is not None:
        overall = "fail"
    elif skipped:
        overall = "incomplete"
    else:
        overall = "pass"
    report = GenerationReport(
        task=task,
        words=records,
        overall=overall,
        counterexample=counterexample,
        skipped=skipped,
        timing_seconds=time.perf_counter() - t0,
    )
    report.config_hash = report.compute_hash()
    return report


@dataclass
class SuiteCheck:
    """One named instance in the default suite, with its expected outcome."""

    name: str
    task: GenerationTask
    expected: str  # pass | fail
    # words that must appear as failures with these (intersection, target) dims
    must_fail_words: dict[str, tuple[int, int]] = field(default_factory=dict)


@dataclass
class SuiteEntry:
    check: SuiteCheck
    report: GenerationReport

    def as_expected(self) -> bool:
        if self.report.overall != self.check.expected:
            return False
        for word, (inter, target) in self.check.must_fail_words.items():
            rec = self.report.record_for(word)
            if rec is None or rec.verdict != "fail":
                return False
            if rec.intersection != inter or rec.target != target:
                return False
        return True

    def to_dict(self) -> dict:
        return {
            "name": self.check.name,
            "expected": self.check.expected,
            "as_expected": self.as_expected(),
            "report": self.report.to_dict(),
        }


@dataclass
class SuiteResult:
    entries: list[SuiteEntry]

    def ok(self) -> bool:
        return all(e.as_expected() for e in self.entries)

    def to_dict(self) -> dict:
        return {"checks": [e.to_dict() for e in self.entries], "suite_ok": self.ok()}


def default_suite_checks(
    N_list: Sequence[int] = (2, 3),
    max_len_colored: int = 6,
    max_len_uncolored: int = 8,
    include_lower_rank: bool | None = None,
) -> list[SuiteCheck]:
    """The standard battery: the generation theorems plus negative controls.

    The lower-rank recursion needs N >= 3; by default it is included
    exactly for those N, and requesting it explicitly with every N < 3
    is an error.
    """
    checks: list[SuiteCheck] = []
    if include_lower_rank and all(N < 3 for N in N_list):
        raise ValueError("the lower-rank recursion check requires N >= 3")
    for N in N_list:
        if N >= 3 and include_lower_rank is not False:
            checks.append(
                SuiteCheck(
                    name=f"free-u-from-classical-u-and-lower-rank-N{N}",
                    task=GenerationTask(
                        target=GroupSpec(GroupFamily.FREE_U, N),
                        subgroups=(
                            GroupSpec(GroupFamily.CLASSICAL_U, N),
                            GroupSpec(GroupFamily.EMBEDDED_FREE_U_LOWER, N),
                        ),
                        max_len=max_len_colored,
                    ),
                    expected="pass",
                )
            )
        checks.append(
            SuiteCheck(
                name=f"free-u-from-classical-u-and-free-torus-N{N}",
                task=GenerationTask(
                    target=GroupSpec(GroupFamily.FREE_U, N),
                    subgroups=(
                        GroupSpec(GroupFamily.CLASSICAL_U, N),
                        GroupSpec(GroupFamily.TORUS_FREE_GROUP, N),
                    ),
                    max_len=max_len_colored,
                ),
                expected="pass",
            )
        )
        checks.append(
            SuiteCheck(
                name=f"free-u-from-classical-o-and-free-torus-N{N}",
                task=GenerationTask(
                    target=GroupSpec(GroupFamily.FREE_U, N),
                    subgroups=(
                        GroupSpec(GroupFamily.CLASSICAL_O, N),
                        GroupSpec(GroupFamily.TORUS_FREE_GROUP, N),
                    ),
                    max_len=max_len_colored,
                ),
                expected="pass",
            )
        )
        checks.append(
            SuiteCheck(
                name=f"free-o-from-classical-o-and-z2-torus-N{N}",
                task=GenerationTask(
                    target=GroupSpec(GroupFamily.FREE_O, N),
                    subgroups=(
                        GroupSpec(GroupFamily.CLASSICAL_O, N),
                        GroupSpec(GroupFamily.TORUS_Z2, N),
                    ),
                    max_len=max_len_uncolored,
                    word_filter=WordFilter.UNCOLORED_ONLY,
                ),
                expected="pass",
            )
        )
    checks.append(
        SuiteCheck(
            name="control-free-u-classical-u-only-N2",
            task=GenerationTask(
                target=GroupSpec(GroupFamily.FREE_U, 2),
                subgroups=(GroupSpec(GroupFamily.CLASSICAL_U, 2),),
                max_len=4,
            ),
            expected="fail",
            must_fail_words={"uuUU": (2, 1)},
        )
    )
    checks.append(
        SuiteCheck(
            name="control-free-u-free-torus-only-N2",
            task=GenerationTask(
                target=GroupSpec(GroupFamily.FREE_U, 2),
                subgroups=(GroupSpec(GroupFamily.TORUS_FREE_GROUP, 2),),
                max_len=4,
            ),
            expected="fail",
            must_fail_words={"uuUU": (4, 1)},
        )
    )
    return checks


def run_paper_suite(
    N_list: Sequence[int] = (2, 3),
    max_len_colored: int = 6,
    max_len_uncolored: int = 8,
    cap: int = DEFAULT_WORD_CAP,
    entry_guard: int = DEFAULT_ENTRY_GUARD,
    workers: int = 1,
) -> SuiteResult:
    """Run the default battery and aggregate the verdicts."""
    checks = default_suite_checks(N_list, max_len_colored, max_len_uncolored)
    entries = [
        SuiteEntry(
            check=c,
            report=run_generation_check(
                c.task, cap=cap, entry_guard=entry_guard, workers=workers
            ),
        )
        for c in checks
    ]
    return SuiteResult(entries)
