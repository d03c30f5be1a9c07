"""Fixed-point spaces of tensor words for every supported group family.

Free quantum groups get their fixed spaces from the diagram spanning
sets (non-crossing matched pairings, non-crossing pairings, non-crossing
partitions); classical groups from all (matched) pairings/partitions;
tori from coordinate bases selected by group-word reduction; and the
embedded lower-rank free unitary group from slot insertion over all
position subsets.  An independent oracle computes the classical fixed
spaces as joint kernels of Lie-algebra generators (plus the reflection
component for the full orthogonal group).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations, product
from math import gcd

from . import elimination
from .diagrams import DiagramFamily, enumerate_diagrams
from .errors import CapExceeded, MemoryGuardExceeded
from .exact_linalg import SubspaceBasis
from .realize import (
    DEFAULT_ENTRY_GUARD,
    SlotAssignment,
    SparseTensor,
    TorusKind,
    coordinate_tensor,
    insertion_psi,
    realize_diagram,
    torus_fixed_basis,
)
from .words import DEFAULT_WORD_CAP, Color, ColoredWord, check_dimension


class GroupFamily(Enum):
    CLASSICAL_U = "classical-u"
    CLASSICAL_O = "classical-o"
    CLASSICAL_S = "classical-s"
    FREE_U = "free-u"
    FREE_O = "free-o"
    FREE_S = "free-s"
    TORUS_ABELIAN = "torus-abelian"
    TORUS_FREE_GROUP = "torus-free-group"
    TORUS_Z2 = "torus-z2"
    EMBEDDED_FREE_U_LOWER = "embedded-free-u-lower"


_DIAGRAM_SPANS = {
    GroupFamily.FREE_U: DiagramFamily.NC_MATCHED_PAIRINGS,
    GroupFamily.FREE_O: DiagramFamily.NC_PAIRINGS,
    GroupFamily.FREE_S: DiagramFamily.NC_PARTITIONS,
    GroupFamily.CLASSICAL_U: DiagramFamily.MATCHED_PAIRINGS,
    GroupFamily.CLASSICAL_O: DiagramFamily.ALL_PAIRINGS,
    GroupFamily.CLASSICAL_S: DiagramFamily.ALL_PARTITIONS,
}

_TORUS_KINDS = {
    GroupFamily.TORUS_ABELIAN: TorusKind.ABELIAN,
    GroupFamily.TORUS_FREE_GROUP: TorusKind.FREE_GROUP,
    GroupFamily.TORUS_Z2: TorusKind.FREE_Z2,
}

CLASSICAL_FAMILIES = frozenset(
    {GroupFamily.CLASSICAL_U, GroupFamily.CLASSICAL_O, GroupFamily.TORUS_ABELIAN}
)


@dataclass(frozen=True)
class GroupSpec:
    """A group family at a fixed fundamental dimension N."""

    family: GroupFamily
    N: int

    def __post_init__(self):
        check_dimension(self.N)
        if self.family is GroupFamily.EMBEDDED_FREE_U_LOWER and self.N < 3:
            raise ValueError(
                "the embedded lower-rank free unitary group needs N >= 3 "
                "(its own rank N-1 must be at least 2)"
            )

    def label(self) -> str:
        return self.family.value


def fixed_space(
    G: GroupSpec,
    w: ColoredWord,
    cap: int = DEFAULT_WORD_CAP,
    entry_guard: int = DEFAULT_ENTRY_GUARD,
) -> SubspaceBasis:
    """A spanning set of the invariant vectors of V^w under G."""
    if len(w) > cap:
        raise CapExceeded(f"word length {len(w)} exceeds cap {cap}")
    N = G.N
    fam = G.family
    if fam in _DIAGRAM_SPANS:
        diagrams = enumerate_diagrams(_DIAGRAM_SPANS[fam], w, cap=cap)
        vectors = [realize_diagram(d, N, entry_guard=entry_guard) for d in diagrams]
        return SubspaceBasis(w, N, vectors)
    if fam in _TORUS_KINDS:
        basis = torus_fixed_basis(_TORUS_KINDS[fam], w, N, entry_guard=entry_guard)
        return SubspaceBasis(w, N, [coordinate_tensor(w, N, idx) for idx in basis])
    if fam is GroupFamily.EMBEDDED_FREE_U_LOWER:
        return _embedded_lower_fixed_space(w, N, cap, entry_guard)
    raise ValueError(f"unsupported family {fam!r}")


def _embedded_lower_fixed_space(
    w: ColoredWord, N: int, cap: int, entry_guard: int
) -> SubspaceBasis:
    """Fixed space of the lower-rank free unitary group in the last-coordinate
    embedding: slot subsets take the distinguished vector, the remaining
    subword carries a non-crossing matched pairing at dimension N-1."""
    k = len(w)
    vectors: list[SparseTensor] = []
    for r in range(k + 1):
        for slots in combinations(range(1, k + 1), r):
            assignment = SlotAssignment(w, slots)
            for d in enumerate_diagrams(
                DiagramFamily.NC_MATCHED_PAIRINGS, assignment.remainder_word, cap=cap
            ):
                v = realize_diagram(d, N - 1, entry_guard=entry_guard)
                vectors.append(insertion_psi(v, assignment, N))
    return SubspaceBasis(w, N, vectors)


def lie_kernel_oracle(
    G: GroupSpec,
    w: ColoredWord,
    cap: int = DEFAULT_WORD_CAP,
    entry_guard: int = DEFAULT_ENTRY_GUARD,
    connected_only: bool = False,
    backend: str | None = None,
) -> SubspaceBasis:
    """Exact fixed space of a classical group as a joint operator kernel.

    Generators act on PLAIN factors directly and on STAR factors by
    negative transpose; for the full orthogonal group the reflection
    diag(-1, 1, ..., 1) is imposed multiplicatively on top of the Lie
    kernel (the group is disconnected), unless ``connected_only`` asks
    for the identity-component invariants.
    """
    if G.family not in CLASSICAL_FAMILIES:
        raise ValueError(f"oracle is defined for classical families, not {G.family}")
    if len(w) > cap:
        raise CapExceeded(f"word length {len(w)} exceeds cap {cap}")
    N = G.N
    k = len(w)
    if N**k > entry_guard:
        raise MemoryGuardExceeded(f"{N}**{k} ambient indices exceed guard")
    idx_tuples = list(product(range(1, N + 1), repeat=k))
    signs = [1 if c is Color.PLAIN else -1 for c in w.letters]

    diag_vecs: list[list[int]] = []
    sparse_ops: list[list[tuple[int, int, int]]] = []
    if G.family in (GroupFamily.CLASSICAL_U, GroupFamily.TORUS_ABELIAN):
        for a in range(1, N + 1):
            diag_vecs.append(
                [sum(s for v, s in zip(I, signs) if v == a) for I in idx_tuples]
            )
    if G.family is GroupFamily.CLASSICAL_U:
        for a in range(1, N + 1):
            for b in range(1, N + 1):
                if a != b:
                    sparse_ops.append(_ambient_op(_unit_matrix(N, a, b), w, idx_tuples))
    if G.family is GroupFamily.CLASSICAL_O:
        if not connected_only:
            refl = []
            for I in idx_tuples:
                r = 1
                for v in I:
                    if v == 1:
                        r = -r
                refl.append(r - 1)
            diag_vecs.append(refl)
        for a in range(1, N + 1):
            for b in range(a + 1, N + 1):
                X = _unit_matrix(N, a, b)
                Xb = _unit_matrix(N, b, a)
                anti = {key: X.get(key, 0) - Xb.get(key, 0) for key in X | Xb}
                sparse_ops.append(_ambient_op(anti, w, idx_tuples))

    vectors = _joint_kernel(diag_vecs, sparse_ops, idx_tuples, backend)
    tensors = []
    for dense in vectors:
        entries = {idx_tuples[i]: val for i, val in enumerate(dense) if val}
        g = 0
        for val in entries.values():
            g = gcd(g, val)
        if g > 1:
            entries = {idx: val // g for idx, val in entries.items()}
        tensors.append(SparseTensor(w, N, entries, validate=False))
    return SubspaceBasis(w, N, tensors)


def _unit_matrix(N: int, a: int, b: int) -> dict[tuple[int, int], int]:
    return {(a, b): 1}


def _ambient_op(
    X: dict[tuple[int, int], int],
    w: ColoredWord,
    idx_tuples: list[tuple[int, ...]],
) -> list[tuple[int, int, int]]:
    """Triples (row, col, val) of sum_t X_t acting on the word ambient."""
    flat_of = {I: i for i, I in enumerate(idx_tuples)}
    acc: dict[tuple[int, int], int] = {}
    letters = w.letters
    for col, I in enumerate(idx_tuples):
        for t, (v, color) in enumerate(zip(I, letters)):
            if color is Color.PLAIN:
                moves = [(a, val) for (a, b), val in X.items() if b == v]
            else:
                moves = [(b, -val) for (a, b), val in X.items() if a == v]
            for new, coef in moves:
                if coef == 0:
                    continue
                J = I[:t] + (new,) + I[t + 1 :]
                key = (flat_of[J], col)
                acc[key] = acc.get(key, 0) + coef
    return [(i, j, val) for (i, j), val in sorted(acc.items()) if val != 0]


def _joint_kernel(
    diag_vecs: list[list[int]],
    sparse_ops: list[list[tuple[int, int, int]]],
    idx_tuples: list,
    backend: str | None,
) -> list[list[int]]:
    """Iterated kernel intersection, diagonal conditions first."""
    n = len(idx_tuples)
    coords = [i for i in range(n) if all(d[i] == 0 for d in diag_vecs)]
    if not sparse_ops:
        return [_unit_vector(n, c) for c in coords]
    K: list[list[int]] | None = None
    for op in sparse_ops:
        if K is None:
            d = len(coords)
            if d == 0:
                return []
            pos_of = {c: j for j, c in enumerate(coords)}
            rows: dict[int, list[int]] = {}
            for i, jcol, val in op:
                j = pos_of.get(jcol)
                if j is not None:
                    rows.setdefault(i, [0] * d)[j] += val
            system = [row for _, row in sorted(rows.items()) if any(row)]
            xs = elimination.nullspace(system, d, backend=backend)
            K = []
            for x in xs:
                v = [0] * n
                for j, c in enumerate(coords):
                    v[c] = x[j]
                K.append(v)
        else:
            d = len(K)
            if d == 0:
                return []
            images: list[dict[int, int]] = []
            for vt in K:
                img: dict[int, int] = {}
                for i, jcol, val in op:
                    x = vt[jcol]
                    if x:
                        img[i] = img.get(i, 0) + val * x
                images.append(img)
            touched = sorted(set().union(*(set(img) for img in images)))
            system = []
            for i in touched:
                row = [img.get(i, 0) for img in images]
                if any(row):
                    system.append(row)
            xs = elimination.nullspace(system, d, backend=backend)
            newK = []
            for x in xs:
                v = [0] * n
                for coef, vt in zip(x, K):
                    if coef:
                        for p, val in enumerate(vt):
                            if val:
                                v[p] += coef * val
                newK.append(v)
            K = newK
    return K if K is not None else []


def _unit_vector(n: int, pos: int) -> list[int]:
    v = [0] * n
    v[pos] = 1
    return v
