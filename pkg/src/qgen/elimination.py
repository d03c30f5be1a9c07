"""Backend selection for the elimination kernel.

The compiled core (``qgen._elim_core``) is used when it was built and the
environment variable ``QGEN_PURE`` is unset; it raises OverflowError as
soon as an intermediate leaves 64 bits, in which case the call is
re-run on the pure big-integer kernel.  ``backend="pure"`` or
``backend="compiled"`` forces one side (used by tests and benchmarks).
"""

from __future__ import annotations

import os
from fractions import Fraction
from math import gcd

from . import _elim_py

try:
    from . import _elim_core
except ImportError:  # pragma: no cover - build without compiler
    _elim_core = None

_FORCE_PURE = bool(os.environ.get("QGEN_PURE"))


def active_backend() -> str:
    """Name of the backend used by default: "compiled" or "pure"."""
    if _elim_core is not None and not _FORCE_PURE:
        return "compiled"
    return "pure"


def _resolve(backend: str | None):
    if backend is None:
        backend = active_backend()
    if backend == "compiled":
        if _elim_core is None:
            raise RuntimeError("compiled elimination core is not available")
        return _elim_core
    if backend == "pure":
        return _elim_py
    raise ValueError(f"unknown backend {backend!r}")


def rank(rows: list[list[int]], ncols: int, backend: str | None = None) -> int:
    """Exact rank of an integer matrix (rows of equal length ncols)."""
    mod = _resolve(backend)
    if mod is _elim_py:
        return _elim_py.rank(rows, ncols)
    try:
        return mod.rank(rows, ncols)
    except OverflowError:
        return _elim_py.rank(rows, ncols)


def echelon(
    rows: list[list[int]], ncols: int, backend: str | None = None
) -> tuple[list[list[int]], list[int]]:
    """Fraction-free echelon form and pivot columns."""
    mod = _resolve(backend)
    if mod is _elim_py:
        return _elim_py.echelon(rows, ncols)
    try:
        return mod.echelon(rows, ncols)
    except OverflowError:
        return _elim_py.echelon(rows, ncols)


def nullspace(
    rows: list[list[int]], ncols: int, backend: str | None = None
) -> list[list[int]]:
    """Primitive integer basis of the right kernel {x : M x = 0}.

    Echelon reduction runs on the selected backend; the back substitution
    works on the (small) echelon output with exact rationals and clears
    denominators per vector.
    """
    if ncols == 0:
        return []
    if not rows:
        return [[1 if j == i else 0 for j in range(ncols)] for i in range(ncols)]
    ech, pivots = echelon(rows, ncols, backend=backend)
    pivset = set(pivots)
    free_cols = [c for c in range(ncols) if c not in pivset]
    basis: list[list[int]] = []
    for f in free_cols:
        x: list[Fraction] = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        # pivot rows are ech[0..r-1], pivot r sits at column pivots[r]
        for r in range(len(pivots) - 1, -1, -1):
            c = pivots[r]
            s = Fraction(0)
            row = ech[r]
            for j in range(c + 1, ncols):
                if row[j] and x[j]:
                    s += row[j] * x[j]
            x[c] = -s / row[c]
        basis.append(_clear_fractions(x))
    return basis


def _clear_fractions(x: list[Fraction]) -> list[int]:
    den = 1
    for v in x:
        den = den * v.denominator // gcd(den, v.denominator)
    ints = [int(v * den) for v in x]
    g = 0
    for v in ints:
        g = gcd(g, v)
    if g > 1:
        ints = [v // g for v in ints]
    return ints
