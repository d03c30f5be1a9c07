"""Exact rational linear algebra over spanning sets of sparse tensors.

Matrices are plain lists of rows with integer or Fraction entries;
denominators are cleared row by row (rank-preserving) and all
elimination runs fraction-free on integers, so every rank decision is
exact.  Vectors of a subspace are compressed onto the union of their
supports before elimination: the ambient dimension N**k is huge, the
fixed spaces live on few multi-indices.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence

from . import elimination
from .errors import AmbientMismatch
from .realize import MultiIndex, SparseTensor
from .words import ColoredWord

#: An exact matrix is a sequence of equal-length rows of ints or Fractions.
Matrix = Sequence[Sequence[int | Fraction]]


def _integer_rows(M: Matrix) -> tuple[list[list[int]], int]:
    rows = [list(r) for r in M]
    ncols = len(rows[0]) if rows else 0
    for r in rows:
        if len(r) != ncols:
            raise ValueError("ragged matrix")
    out: list[list[int]] = []
    for r in rows:
        den = 1
        for v in r:
            if isinstance(v, Fraction):
                den = lcm(den, v.denominator)
        out.append([int(v * den) if isinstance(v, Fraction) else v * den for v in r])
    return out, ncols


def rank(M: Matrix, backend: str | None = None) -> int:
    """Exact rank of a matrix of integers or Fractions."""
    rows, ncols = _integer_rows(M)
    rows = [r for r in rows if any(r)]
    if not rows or ncols == 0:
        return 0
    return elimination.rank(rows, ncols, backend=backend)


class SubspaceBasis:
    """A spanning set (not necessarily independent) of a subspace of V^w."""

    __slots__ = ("word", "N", "vectors")

    def __init__(self, word: ColoredWord, N: int, vectors: Sequence[SparseTensor]):
        for v in vectors:
            if v.word != word or v.N != N:
                raise AmbientMismatch("vector does not match the ambient word/N")
        self.word = word
        self.N = N
        self.vectors: list[SparseTensor] = list(vectors)

    def __len__(self) -> int:
        return len(self.vectors)

    def __repr__(self) -> str:
        return (
            f"SubspaceBasis({str(self.word)!r}, N={self.N}, "
            f"nvectors={len(self.vectors)})"
        )

    def support_union(self) -> list[MultiIndex]:
        sup: set[MultiIndex] = set()
        for v in self.vectors:
            sup |= v.support()
        return sorted(sup)

    def rows_over(self, columns: Sequence[MultiIndex]) -> list[list[int]]:
        """Coefficient rows over the given columns; entries at other
        multi-indices are dropped (used for column-restricted ranks)."""
        colpos = {idx: i for i, idx in enumerate(columns)}
        rows = []
        for v in self.vectors:
            row = [0] * len(columns)
            for idx, c in v.entries.items():
                pos = colpos.get(idx)
                if pos is not None:
                    row[pos] = c
            rows.append(row)
        return rows

    def coordinate_support(self) -> set[MultiIndex] | None:
        """The index set when every vector is a single-entry coordinate vector."""
        sup: set[MultiIndex] = set()
        for v in self.vectors:
            if len(v.entries) != 1:
                return None
            sup |= v.support()
        return sup


def _check_same_ambient(A: SubspaceBasis, B: SubspaceBasis) -> None:
    if A.word != B.word or A.N != B.N:
        raise AmbientMismatch("subspaces live on different ambients")


def dim_span(B: SubspaceBasis, backend: str | None = None) -> int:
    """Rank of the vectors over the multi-index coordinate basis."""
    vectors = [v for v in B.vectors if not v.is_zero()]
    if not vectors:
        return 0
    coords = set(B.coordinate_support() or ())
    if coords and len(coords) == len(vectors):
        return len(coords)  # distinct unit vectors
    columns = B.support_union()
    rows = SubspaceBasis(B.word, B.N, vectors).rows_over(columns)
    return elimination.rank(rows, len(columns), backend=backend)


def dim_intersection(
    A: SubspaceBasis, B: SubspaceBasis, backend: str | None = None
) -> int:
    """dim(span A ∩ span B) by rank counting: dim A + dim B - rank(stacked)."""
    _check_same_ambient(A, B)
    da, db = dim_span(A, backend=backend), dim_span(B, backend=backend)
    if da == 0 or db == 0:
        return 0
    for X, Y, dx in ((A, B, da), (B, A, db)):
        S = Y.coordinate_support()
        if S is not None:
            # vectors of span X supported inside the coordinate set S
            return dx - _rank_outside(X, S, backend)
    columns = sorted(set(A.support_union()) | set(B.support_union()))
    rows = A.rows_over(columns) + B.rows_over(columns)
    return da + db - elimination.rank(rows, len(columns), backend=backend)


def _rank_outside(
    X: SubspaceBasis, S: set[MultiIndex], backend: str | None
) -> int:
    """Rank of X's vectors with the columns in S deleted."""
    columns = [idx for idx in X.support_union() if idx not in S]
    if not columns:
        return 0
    rows = [r for r in X.rows_over(columns) if any(r)]
    if not rows:
        return 0
    return elimination.rank(rows, len(columns), backend=backend)


def contains(A: SubspaceBasis, v: SparseTensor, backend: str | None = None) -> bool:
    """True iff v lies in span A (appending v does not raise the rank)."""
    if v.word != A.word or v.N != A.N:
        raise AmbientMismatch("vector does not match the ambient")
    if v.is_zero():
        return True
    if not v.support() <= set(A.support_union()):
        return False
    extended = SubspaceBasis(A.word, A.N, list(A.vectors) + [v])
    return dim_span(A, backend=backend) == dim_span(extended, backend=backend)


def subspace_leq(A: SubspaceBasis, B: SubspaceBasis, backend: str | None = None) -> bool:
    """True iff span A is contained in span B."""
    _check_same_ambient(A, B)
    return all(contains(B, v, backend=backend) for v in A.vectors)


def intersection_basis(
    A: SubspaceBasis, B: SubspaceBasis, backend: str | None = None
) -> SubspaceBasis:
    """A spanning set of span A ∩ span B.

    When one side consists of coordinate vectors the intersection is the
    set of span-A combinations vanishing outside that index set; in
    general it comes from the kernel of the stacked system
    sum_i x_i A_i - sum_j y_j B_j = 0.
    """
    _check_same_ambient(A, B)
    empty = SubspaceBasis(A.word, A.N, [])
    if not A.vectors or not B.vectors:
        return empty
    SA, SB = A.coordinate_support(), B.coordinate_support()
    if SA is not None and SB is not None:
        from .realize import coordinate_tensor

        common = sorted(SA & SB)
        return SubspaceBasis(
            A.word, A.N, [coordinate_tensor(A.word, A.N, idx) for idx in common]
        )
    if SB is not None:
        return _intersect_with_coordinates(A, SB, backend)
    if SA is not None:
        return _intersect_with_coordinates(B, SA, backend)

    columns = sorted(set(A.support_union()) | set(B.support_union()))
    arows = A.rows_over(columns)
    brows = B.rows_over(columns)
    na, nb = len(arows), len(brows)
    system = [
        [arows[i][c] for i in range(na)] + [-brows[j][c] for j in range(nb)]
        for c in range(len(columns))
    ]
    kernel = elimination.nullspace(system, na + nb, backend=backend)
    return SubspaceBasis(
        A.word, A.N, _combine(A, [x[:na] for x in kernel])
    )


def _intersect_with_coordinates(
    X: SubspaceBasis, S: set[MultiIndex], backend: str | None
) -> SubspaceBasis:
    columns = [idx for idx in X.support_union() if idx not in S]
    nx = len(X.vectors)
    system = [[v.entries.get(c, 0) for v in X.vectors] for c in columns]
    kernel = elimination.nullspace(system, nx, backend=backend)
    return SubspaceBasis(X.word, X.N, _combine(X, kernel))


def _combine(X: SubspaceBasis, coefficients: list[list[int]]) -> list[SparseTensor]:
    out = []
    for coefs in coefficients:
        acc: dict[MultiIndex, int] = {}
        for c, v in zip(coefs, X.vectors):
            if c == 0:
                continue
            for idx, val in v.entries.items():
                acc[idx] = acc.get(idx, 0) + c * val
        t = SparseTensor(X.word, X.N, acc, validate=False)
        if not t.is_zero():
            out.append(t)
    return out


def iterated_intersection_dim(
    bases: Sequence[SubspaceBasis], backend: str | None = None
) -> int:
    """Dimension of the intersection of any number of spanned subspaces."""
    if not bases:
        raise ValueError("need at least one subspace")
    if len(bases) == 1:
        return dim_span(bases[0], backend=backend)
    if len(bases) == 2:
        return dim_intersection(bases[0], bases[1], backend=backend)
    cur = bases[0]
    for nxt in bases[1:]:
        cur = intersection_basis(cur, nxt, backend=backend)
    return dim_span(cur, backend=backend)
