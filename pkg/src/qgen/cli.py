"""Command-line interface.

Subcommands: enumerate, gram, fixdim, intersect, gencheck, paper-suite.
Words use the text format of :mod:`qgen.words` (``u`` = fundamental,
``U`` = dual), so ``uUuU`` is a single CLI token.  Exit codes: 0 on
success with all checks passing, 1 on a failing (or incomplete)
generation verdict, 2 on usage or parameter errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .diagrams import DiagramFamily, enumerate_diagrams, gram_matrix
from .errors import CapExceeded, MemoryGuardExceeded, WordParseError
from .exact_linalg import dim_span, iterated_intersection_dim, rank
from .fixed_spaces import GroupFamily, GroupSpec, fixed_space
from .gencheck import (
    GenerationTask,
    WordFilter,
    run_generation_check,
    run_paper_suite,
)
from .realize import DEFAULT_ENTRY_GUARD
from .words import DEFAULT_WORD_CAP, parse_word

FAMILY_NAMES = [f.value for f in DiagramFamily]
GROUP_NAMES = [g.value for g in GroupFamily]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qgen",
        description=(
            "Exact checks of topological generation for free quantum groups, "
            "truncated at a tensor-word length cutoff."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=["json", "csv"], default="json")
        p.add_argument("--out", default=None, help="output path (default: stdout)")
        p.add_argument(
            "--max-word-len",
            type=int,
            default=DEFAULT_WORD_CAP,
            help="cap on word length (default %(default)s)",
        )
        p.add_argument(
            "--entry-guard",
            type=int,
            default=DEFAULT_ENTRY_GUARD,
            help="cap on stored tensor entries (default %(default)s)",
        )

    p = sub.add_parser("enumerate", help="list the diagrams of a family on a word")
    p.add_argument("--family", choices=FAMILY_NAMES, required=True)
    p.add_argument("--word", required=True)
    add_common(p)

    p = sub.add_parser("gram", help="Gram matrix and exact rank of a diagram family")
    p.add_argument("--family", choices=FAMILY_NAMES, required=True)
    p.add_argument("--word", required=True)
    p.add_argument("--N", type=int, required=True)
    add_common(p)

    p = sub.add_parser("fixdim", help="dimension of a fixed space")
    p.add_argument("--group", choices=GROUP_NAMES, required=True)
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--word", required=True)
    add_common(p)

    p = sub.add_parser("intersect", help="intersection dimension of fixed spaces")
    p.add_argument(
        "--groups",
        required=True,
        help="comma-separated group names, e.g. classical-u,torus-free-group",
    )
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--word", required=True)
    add_common(p)

    p = sub.add_parser("gencheck", help="truncated generation check")
    p.add_argument("--target", choices=GROUP_NAMES, required=True)
    p.add_argument("--subgroups", required=True, help="comma-separated group names")
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--max-len", type=int, required=True)
    p.add_argument(
        "--uncolored",
        action="store_true",
        help="check uncolored words only (required for orthogonal targets)",
    )
    p.add_argument("--workers", type=int, default=1)
    add_common(p)

    p = sub.add_parser("paper-suite", help="run the default theorem battery")
    p.add_argument(
        "--N",
        default="2,3",
        help="comma-separated dimensions (default %(default)s)",
    )
    p.add_argument("--max-len", type=int, default=6, help="colored-word cutoff")
    p.add_argument(
        "--max-len-uncolored", type=int, default=8, help="uncolored-word cutoff"
    )
    p.add_argument("--workers", type=int, default=1)
    add_common(p)

    return parser


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")


def _csv_text(header: list, rows: list[list]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf)
    if header:
        writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _parse_word_arg(text: str, flag: str):
    try:
        return parse_word(text)
    except WordParseError as exc:
        raise _UsageError(f"{flag}: {exc}") from exc


def _parse_groups(text: str, N: int, flag: str) -> list[GroupSpec]:
    specs = []
    for name in text.split(","):
        name = name.strip()
        if not name:
            continue
        try:
            fam = GroupFamily(name)
        except ValueError:
            raise _UsageError(
                f"{flag}: unknown group {name!r} (choose from {', '.join(GROUP_NAMES)})"
            ) from None
        try:
            specs.append(GroupSpec(fam, N))
        except ValueError as exc:
            raise _UsageError(f"{flag}: {exc}") from exc
    if not specs:
        raise _UsageError(f"{flag}: no group names given")
    return specs


class _UsageError(Exception):
    pass


def _report_rows(report_dict: dict, labels: list[str]) -> tuple[list, list[list]]:
    header = ["word"] + labels + ["intersection", "target", "verdict"]
    rows = []
    for rec in report_dict["words"]:
        rows.append(
            [rec["word"]]
            + [rec["dims"].get(lab, "") for lab in labels]
            + [rec["intersection"], rec["target"], rec["verdict"]]
        )
    return header, rows


def _cmd_enumerate(args) -> int:
    w = _parse_word_arg(args.word, "--word")
    diagrams = enumerate_diagrams(DiagramFamily(args.family), w, cap=args.max_word_len)
    payload = {
        "word": str(w),
        "family": args.family,
        "count": len(diagrams),
        "diagrams": [d.block_list() for d in diagrams],
    }
    if args.format == "json":
        _emit(json.dumps(payload, indent=2), args.out)
    else:
        rows = [[i, json.dumps(d.block_list())] for i, d in enumerate(diagrams)]
        _emit(_csv_text(["index", "blocks"], rows), args.out)
    return 0


def _cmd_gram(args) -> int:
    w = _parse_word_arg(args.word, "--word")
    diagrams = enumerate_diagrams(DiagramFamily(args.family), w, cap=args.max_word_len)
    matrix = gram_matrix(diagrams, args.N)
    r = rank(matrix)
    payload = {
        "word": str(w),
        "family": args.family,
        "N": args.N,
        "count": len(diagrams),
        "diagrams": [d.block_list() for d in diagrams],
        "matrix": matrix,
        "rank": r,
    }
    if args.format == "json":
        _emit(json.dumps(payload, indent=2), args.out)
    else:
        rows = [[i] + row for i, row in enumerate(matrix)]
        rows.append(["rank", r])
        _emit(_csv_text([], rows), args.out)
    return 0


def _cmd_fixdim(args) -> int:
    w = _parse_word_arg(args.word, "--word")
    specs = _parse_groups(args.group, args.N, "--group")
    basis = fixed_space(
        specs[0], w, cap=args.max_word_len, entry_guard=args.entry_guard
    )
    payload = {
        "word": str(w),
        "group": specs[0].label(),
        "N": args.N,
        "dim": dim_span(basis),
    }
    if args.format == "json":
        _emit(json.dumps(payload, indent=2), args.out)
    else:
        _emit(
            _csv_text(
                ["word", "group", "N", "dim"],
                [[payload["word"], payload["group"], args.N, payload["dim"]]],
            ),
            args.out,
        )
    return 0


def _cmd_intersect(args) -> int:
    w = _parse_word_arg(args.word, "--word")
    specs = _parse_groups(args.groups, args.N, "--groups")
    bases = [
        fixed_space(G, w, cap=args.max_word_len, entry_guard=args.entry_guard)
        for G in specs
    ]
    labels = []
    seen: dict[str, int] = {}
    for G in specs:
        base = G.label()
        seen[base] = seen.get(base, 0) + 1
        labels.append(base if seen[base] == 1 else f"{base}#{seen[base]}")
    dims = {lab: dim_span(B) for lab, B in zip(labels, bases)}
    inter = iterated_intersection_dim(bases)
    payload = {"word": str(w), "N": args.N, "dims": dims, "intersection": inter}
    if args.format == "json":
        _emit(json.dumps(payload, indent=2), args.out)
    else:
        _emit(
            _csv_text(
                ["word", "N"] + labels + ["intersection"],
                [[payload["word"], args.N] + [dims[lab] for lab in labels] + [inter]],
            ),
            args.out,
        )
    return 0


def _cmd_gencheck(args) -> int:
    target = _parse_groups(args.target, args.N, "--target")[0]
    subgroups = tuple(_parse_groups(args.subgroups, args.N, "--subgroups"))
    word_filter = (
        WordFilter.UNCOLORED_ONLY if args.uncolored else WordFilter.ALL_COLORINGS
    )
    try:
        task = GenerationTask(
            target=target,
            subgroups=subgroups,
            max_len=args.max_len,
            word_filter=word_filter,
        )
    except ValueError as exc:
        raise _UsageError(str(exc)) from exc
    report = run_generation_check(
        task, cap=args.max_word_len, entry_guard=args.entry_guard, workers=args.workers
    )
    payload = report.to_dict()
    if args.format == "json":
        _emit(json.dumps(payload, indent=2), args.out)
    else:
        header, rows = _report_rows(payload, task.subgroup_labels())
        _emit(_csv_text(header, rows), args.out)
    print(f"overall: {report.overall}", file=sys.stderr)
    return 0 if report.overall == "pass" else 1


def _cmd_paper_suite(args) -> int:
    try:
        N_list = [int(x) for x in str(args.N).split(",") if x.strip()]
    except ValueError:
        raise _UsageError(f"--N: expected comma-separated integers, got {args.N!r}")
    try:
        result = run_paper_suite(
            N_list=N_list,
            max_len_colored=args.max_len,
            max_len_uncolored=args.max_len_uncolored,
            cap=args.max_word_len,
            entry_guard=args.entry_guard,
            workers=args.workers,
        )
    except ValueError as exc:
        raise _UsageError(str(exc)) from exc
    payload = result.to_dict()
    if args.format == "json":
        _emit(json.dumps(payload, indent=2), args.out)
    else:
        header = [
            "check",
            "word",
            "dims",
            "intersection",
            "target",
            "verdict",
            "as_expected",
        ]
        rows = []
        for entry in payload["checks"]:
            for rec in entry["report"]["words"]:
                rows.append(
                    [
                        entry["name"],
                        rec["word"],
                        json.dumps(rec["dims"], sort_keys=True),
                        rec["intersection"],
                        rec["target"],
                        rec["verdict"],
                        entry["as_expected"],
                    ]
                )
        _emit(_csv_text(header, rows), args.out)
    for entry in payload["checks"]:
        status = "ok" if entry["as_expected"] else "UNEXPECTED"
        print(
            f"{entry['name']}: {entry['report']['overall']} "
            f"(expected {entry['expected']}) [{status}]",
            file=sys.stderr,
        )
    print(f"suite_ok: {payload['suite_ok']}", file=sys.stderr)
    return 0 if payload["suite_ok"] else 1


_COMMANDS = {
    "enumerate": _cmd_enumerate,
    "gram": _cmd_gram,
    "fixdim": _cmd_fixdim,
    "intersect": _cmd_intersect,
    "gencheck": _cmd_gencheck,
    "paper-suite": _cmd_paper_suite,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except _UsageError as exc:
        print(f"qgen {args.command}: {exc}", file=sys.stderr)
        return 2
    except (CapExceeded, MemoryGuardExceeded) as exc:
        print(f"qgen {args.command}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
