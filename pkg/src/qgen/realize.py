"""Diagrams as invariant tensors, slot insertion, and torus-fixed bases.

A diagram on a word of length k becomes the 0/1 tensor in the k-fold
tensor power of the N-dimensional space that is 1 exactly on the
multi-indices constant on every block.  Torus-fixed coordinate bases are
cut out by word reduction in the free group on N generators, the free
product of N copies of the order-two group, or the free abelian group.
"""

from __future__ import annotations

from enum import Enum
from itertools import product
from typing import Iterable, Iterator

from .diagrams import Diagram
from .errors import AmbientMismatch, MemoryGuardExceeded
from .words import Color, ColoredWord, check_dimension

MultiIndex = tuple[int, ...]

#: Default bound on the number of stored entries of one tensor.
DEFAULT_ENTRY_GUARD = 10**7


class SparseTensor:
    """Exact-integer vector in the k-fold tensor power, stored by multi-index."""

    __slots__ = ("word", "N", "entries")

    def __init__(
        self,
        word: ColoredWord,
        N: int,
        entries: dict[MultiIndex, int] | Iterable[tuple[MultiIndex, int]],
        validate: bool = True,
    ):
        check_dimension(N)
        ent = dict(entries)
        ent = {idx: c for idx, c in ent.items() if c != 0}
        if validate:
            k = len(word)
            for idx, c in ent.items():
                if len(idx) != k:
                    raise ValueError(f"multi-index {idx} has wrong length")
                if not all(1 <= v <= N for v in idx):
                    raise ValueError(f"multi-index {idx} out of range 1..{N}")
                if not isinstance(c, int):
                    raise TypeError(f"coefficient {c!r} is not an integer")
        self.word = word
        self.N = N
        self.entries: dict[MultiIndex, int] = ent

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SparseTensor)
            and self.word == other.word
            and self.N == other.N
            and self.entries == other.entries
        )

    def __repr__(self) -> str:
        return f"SparseTensor({str(self.word)!r}, N={self.N}, nnz={len(self.entries)})"

    def is_zero(self) -> bool:
        return not self.entries

    def support(self) -> set[MultiIndex]:
        return set(self.entries)

    def items(self) -> list[tuple[MultiIndex, int]]:
        """Entries in canonical (lexicographic) order."""
        return sorted(self.entries.items())

    def inner(self, other: "SparseTensor") -> int:
        """Coordinatewise inner product (all coefficients are real integers)."""
        if self.word != other.word or self.N != other.N:
            raise AmbientMismatch("tensors live on different ambients")
        a, b = self.entries, other.entries
        if len(b) < len(a):
            a, b = b, a
        return sum(c * b[idx] for idx, c in a.items() if idx in b)

    def to_pairs(self) -> list[list]:
        """JSON-friendly form: [[multi-index, coefficient], ...] in canonical order."""
        return [[list(idx), c] for idx, c in self.items()]


def realize_diagram(
    d: Diagram, N: int, entry_guard: int = DEFAULT_ENTRY_GUARD
) -> SparseTensor:
    """The 0/1 tensor supported on multi-indices constant on every block."""
    check_dimension(N)
    nblocks = len(d.blocks)
    if N**nblocks > entry_guard:
        raise MemoryGuardExceeded(
            f"{N}**{nblocks} entries exceed guard {entry_guard}"
        )
    k = len(d.word)
    entries: dict[MultiIndex, int] = {}
    for values in product(range(1, N + 1), repeat=nblocks):
        idx = [0] * k
        for block, v in zip(d.blocks, values):
            for p in block:
                idx[p - 1] = v
        entries[tuple(idx)] = 1
    return SparseTensor(d.word, N, entries, validate=False)


class SlotAssignment:
    """A choice of word positions that receive the distinguished vector.

    ``slots`` are the 1-based positions set aside; ``remainder_word`` is
    the colored subword on the other positions, in order.
    """

    __slots__ = ("word", "slots", "remainder_word", "remainder_positions")

    def __init__(self, word: ColoredWord, slots: Iterable[int]):
        slot_set = frozenset(slots)
        k = len(word)
        for p in slot_set:
            if not 1 <= p <= k:
                raise ValueError(f"slot {p} outside 1..{k}")
        self.word = word
        self.slots: tuple[int, ...] = tuple(sorted(slot_set))
        self.remainder_positions: tuple[int, ...] = tuple(
            p for p in range(1, k + 1) if p not in slot_set
        )
        self.remainder_word = word.subword(self.remainder_positions)

    def __repr__(self) -> str:
        return f"SlotAssignment({str(self.word)!r}, slots={list(self.slots)})"


def insertion_psi(v: SparseTensor, assignment: SlotAssignment, N: int) -> SparseTensor:
    """Extend a tensor on the remainder subword to the full word.

    Every multi-index of v (over values 1..N-1, the embedded hyperplane)
    is padded with the value N at each slot position; coefficients are
    unchanged, so the map is injective.
    """
    check_dimension(N)
    if v.N != N - 1:
        raise AmbientMismatch(
            f"inserted tensor must live at dimension {N - 1}, got {v.N}"
        )
    if v.word != assignment.remainder_word:
        raise AmbientMismatch("tensor word does not match the remainder subword")
    k = len(assignment.word)
    slot_set = set(assignment.slots)
    entries: dict[MultiIndex, int] = {}
    for idx, c in v.entries.items():
        it = iter(idx)
        full = tuple(N if p in slot_set else next(it) for p in range(1, k + 1))
        entries[full] = c
    return SparseTensor(assignment.word, N, entries, validate=False)


class TorusKind(Enum):
    FREE_GROUP = "free-group"
    FREE_Z2 = "z2"
    ABELIAN = "abelian"


def torus_fixed_basis(
    kind: TorusKind,
    w: ColoredWord,
    N: int,
    entry_guard: int = DEFAULT_ENTRY_GUARD,
) -> list[MultiIndex]:
    """Multi-indices whose generator word reduces to the identity.

    PLAIN positions contribute a generator, STAR positions its inverse;
    the Z2 kind ignores colors (the generators are involutions).  The
    returned coordinate tensors span the torus fixed space exactly,
    since distinct group elements are linearly independent in the group
    algebra.
    """
    check_dimension(N)
    k = len(w)
    if N**k > entry_guard:
        raise MemoryGuardExceeded(f"{N}**{k} indices exceed guard {entry_guard}")
    reduces = {
        TorusKind.FREE_GROUP: _free_reduces_to_identity,
        TorusKind.FREE_Z2: _z2_reduces_to_identity,
        TorusKind.ABELIAN: _abelian_trivial,
    }[kind]
    letters = w.letters
    out = [
        idx
        for idx in product(range(1, N + 1), repeat=k)
        if reduces(idx, letters)
    ]
    return out


def _signed(idx: MultiIndex, letters: tuple[Color, ...]) -> Iterator[tuple[int, int]]:
    for v, c in zip(idx, letters):
        yield v, (1 if c is Color.PLAIN else -1)


def _free_reduces_to_identity(idx: MultiIndex, letters: tuple[Color, ...]) -> bool:
    stack: list[tuple[int, int]] = []
    for g, s in _signed(idx, letters):
        if stack and stack[-1][0] == g and stack[-1][1] == -s:
            stack.pop()
        else:
            stack.append((g, s))
    return not stack


def _z2_reduces_to_identity(idx: MultiIndex, letters: tuple[Color, ...]) -> bool:
    stack: list[int] = []
    for g in idx:
        if stack and stack[-1] == g:
            stack.pop()
        else:
            stack.append(g)
    return not stack


def _abelian_trivial(idx: MultiIndex, letters: tuple[Color, ...]) -> bool:
    total: dict[int, int] = {}
    for g, s in _signed(idx, letters):
        total[g] = total.get(g, 0) + s
    return all(v == 0 for v in total.values())


def coordinate_tensor(word: ColoredWord, N: int, idx: MultiIndex) -> SparseTensor:
    """The basis tensor with coefficient 1 at a single multi-index."""
    return SparseTensor(word, N, {idx: 1})
