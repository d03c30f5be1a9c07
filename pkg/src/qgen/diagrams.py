"""Partitions and pairings of the positions of a colored word.

Diagrams are stored canonically: each block sorted ascending, blocks
sorted by their minimum.  Enumeration of the non-crossing families uses
the arc recursion (the first open position pairs with an admissible
position, splitting the word into independent stretches) instead of
generate-then-filter; the brute-force filter enumerators live in the
test suite as oracles.
"""

from __future__ import annotations

import json
from enum import Enum
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .errors import AmbientMismatch, CapExceeded, DiagramStructureError
from .words import DEFAULT_WORD_CAP, Color, ColoredWord, check_dimension

Block = tuple[int, ...]


class Diagram:
    """A set partition of {1..k} attached to the word it lives on."""

    __slots__ = ("blocks", "word")

    def __init__(self, blocks: Iterable[Iterable[int]], word: ColoredWord):
        canon = tuple(sorted((tuple(sorted(b)) for b in blocks), key=lambda b: b[0]))
        k = len(word)
        seen: set[int] = set()
        for b in canon:
            if not b:
                raise DiagramStructureError("empty block")
            for p in b:
                if not 1 <= p <= k:
                    raise DiagramStructureError(f"position {p} outside 1..{k}")
                if p in seen:
                    raise DiagramStructureError(f"position {p} in two blocks")
                seen.add(p)
        if len(seen) != k:
            raise DiagramStructureError("blocks do not cover all positions")
        self.blocks: tuple[Block, ...] = canon
        self.word = word

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Diagram)
            and self.blocks == other.blocks
            and self.word == other.word
        )

    def __hash__(self) -> int:
        return hash((self.blocks, self.word))

    def __repr__(self) -> str:
        return f"Diagram({self.block_list()!r} on {str(self.word)!r})"

    def size(self) -> int:
        return len(self.word)

    def block_list(self) -> list[list[int]]:
        return [list(b) for b in self.blocks]

    def to_json(self) -> str:
        """Serialize as a block list, e.g. ``[[1, 2], [3, 4]]``."""
        return json.dumps(self.block_list())


class DiagramFamily(Enum):
    ALL_PAIRINGS = "all-pairings"
    NC_PAIRINGS = "nc-pairings"
    MATCHED_PAIRINGS = "matched-pairings"
    NC_MATCHED_PAIRINGS = "nc-matched"
    ALL_PARTITIONS = "all-partitions"
    NC_PARTITIONS = "nc-partitions"


PAIRING_FAMILIES = frozenset(
    {
        DiagramFamily.ALL_PAIRINGS,
        DiagramFamily.NC_PAIRINGS,
        DiagramFamily.MATCHED_PAIRINGS,
        DiagramFamily.NC_MATCHED_PAIRINGS,
    }
)
MATCHED_FAMILIES = frozenset(
    {DiagramFamily.MATCHED_PAIRINGS, DiagramFamily.NC_MATCHED_PAIRINGS}
)


def is_noncrossing(d: Diagram) -> bool:
    """True iff no two blocks interleave as a < b < c < d."""
    blocks = d.blocks
    for i in range(len(blocks)):
        for j in range(i + 1, len(blocks)):
            if _blocks_cross(blocks[i], blocks[j]):
                return False
    return True


def _blocks_cross(a: Block, b: Block) -> bool:
    # Two disjoint blocks cross iff ownership along the sorted union
    # alternates at least three times (pattern A..B..A..B).
    merged = sorted(((p, 0) for p in a)) + sorted(((p, 1) for p in b))
    merged.sort()
    changes = 0
    prev = merged[0][1]
    for _, owner in merged[1:]:
        if owner != prev:
            changes += 1
            prev = owner
    return changes >= 3


def is_matched(d: Diagram) -> bool:
    """True iff every block pairs one PLAIN position with one STAR position.

    Raises if any block has size other than two.
    """
    letters = d.word.letters
    for b in d.blocks:
        if len(b) != 2:
            raise DiagramStructureError(f"block {list(b)} is not a pair")
        if letters[b[0] - 1] is letters[b[1] - 1]:
            return False
    return True


def enumerate_diagrams(
    family: DiagramFamily, w: ColoredWord, cap: int = DEFAULT_WORD_CAP
) -> list[Diagram]:
    """All diagrams of the family on w, canonically ordered, no duplicates.

    Pairing families give an empty list on odd words, matched families
    additionally when the word is unbalanced.
    """
    k = len(w)
    if k > cap:
        raise CapExceeded(f"word length {k} exceeds cap {cap}")
    positions = tuple(range(1, k + 1))
    if family in PAIRING_FAMILIES:
        if k % 2 == 1:
            return []
        if family in MATCHED_FAMILIES and w.balance() != 0:
            return []
        matched = family in MATCHED_FAMILIES
        noncrossing = family in (
            DiagramFamily.NC_PAIRINGS,
            DiagramFamily.NC_MATCHED_PAIRINGS,
        )
        letters = w.letters
        blocks_iter = _pairings(positions, letters, matched, noncrossing)
        diagrams = [Diagram(blocks, w) for blocks in blocks_iter]
    elif family is DiagramFamily.ALL_PARTITIONS:
        diagrams = [Diagram(blocks, w) for blocks in _set_partitions(positions)]
    elif family is DiagramFamily.NC_PARTITIONS:
        diagrams = [Diagram(blocks, w) for blocks in _nc_partitions(positions)]
    else:
        raise ValueError(f"unknown family {family!r}")
    diagrams.sort(key=lambda d: d.blocks)
    return diagrams


def _pairings(
    positions: tuple[int, ...],
    letters: tuple[Color, ...],
    matched: bool,
    noncrossing: bool,
) -> Iterator[tuple[Block, ...]]:
    """Recursive pairing enumerator over a sorted tuple of positions."""
    if not positions:
        yield ()
        return
    first = positions[0]
    for idx in range(1, len(positions)):
        q = positions[idx]
        if matched and letters[first - 1] is letters[q - 1]:
            continue
        if noncrossing:
            if idx % 2 == 0:
                continue  # odd stretch inside the arc cannot pair off
            inside = positions[1:idx]
            outside = positions[idx + 1 :]
            for pin in _pairings(inside, letters, matched, noncrossing):
                for pout in _pairings(outside, letters, matched, noncrossing):
                    yield ((first, q),) + pin + pout
        else:
            rest = positions[1:idx] + positions[idx + 1 :]
            for tail in _pairings(rest, letters, matched, noncrossing):
                yield ((first, q),) + tail


def _set_partitions(positions: tuple[int, ...]) -> Iterator[list[list[int]]]:
    """All set partitions, by inserting each position into a growing partition."""
    if not positions:
        yield []
        return
    first, rest = positions[0], positions[1:]
    for part in _set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1 :]
        yield [[first]] + part


def _nc_partitions(positions: tuple[int, ...]) -> Iterator[list[list[int]]]:
    """Non-crossing partitions via the gap decomposition of the first block.

    The block containing the first position splits the remaining positions
    into stretches (between consecutive block elements and after the last),
    each of which is partitioned independently; no block may straddle a
    stretch boundary without crossing the first block.
    """
    if not positions:
        yield []
        return
    first, rest = positions[0], positions[1:]
    for choice in _subsets(rest):
        cuts = [first] + list(choice)
        gaps: list[tuple[int, ...]] = []
        for i, c in enumerate(cuts):
            upper = cuts[i + 1] if i + 1 < len(cuts) else None
            gap = tuple(
                p for p in rest if p > c and (upper is None or p < upper)
            )
            gaps.append(gap)
        for combo in _product_partitions(gaps):
            yield [cuts] + combo


def _subsets(items: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    if not items:
        yield ()
        return
    first, rest = items[0], items[1:]
    for tail in _subsets(rest):
        yield tail
        yield (first,) + tail


def _product_partitions(gaps: list[tuple[int, ...]]) -> Iterator[list[list[int]]]:
    if not gaps:
        yield []
        return
    head, tail = gaps[0], gaps[1:]
    for part in _nc_partitions(head):
        for more in _product_partitions(tail):
            yield part + more


def loop_count(p: Diagram, q: Diagram) -> int:
    """Connected components of the union of the two diagrams' block graphs.

    For two pairings every component is a cycle; the count is the number
    of loops formed by stacking one diagram on top of the other.
    """
    if p.word != q.word:
        raise AmbientMismatch("diagrams live on different words")
    k = len(p.word)
    parent = list(range(k + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x: int, y: int) -> None:
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[rx] = ry

    for d in (p, q):
        for b in d.blocks:
            for other in b[1:]:
                union(b[0], other)
    return len({find(x) for x in range(1, k + 1)})


def gram_matrix(diagrams: Sequence[Diagram], N: int) -> list[list[int]]:
    """Matrix of N**loop_count(d_i, d_j); exact arbitrary-precision integers."""
    check_dimension(N)
    if diagrams:
        word = diagrams[0].word
        for d in diagrams[1:]:
            if d.word != word:
                raise AmbientMismatch("diagrams live on different words")
    n = len(diagrams)
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            e = N ** loop_count(diagrams[i], diagrams[j])
            out[i][j] = e
            out[j][i] = e
    return out


@lru_cache(maxsize=None)
def catalan(n: int) -> int:
    """Catalan numbers by the convolution recursion (independent of enumeration)."""
    if n == 0:
        return 1
    return sum(catalan(i) * catalan(n - 1 - i) for i in range(n))
