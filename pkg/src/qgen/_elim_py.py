"""Pure-Python fraction-free elimination over arbitrary-precision integers.

Single-step fraction-free Gaussian elimination: after each pivot the
updated entries are divided by the previous pivot, which is exact (the
entries are minors of the input matrix), so integer growth stays
polynomial and no rationals appear.  Pivoting is deterministic: columns
left to right, first row with a nonzero entry.
"""

from __future__ import annotations


def echelon(rows: list[list[int]], ncols: int) -> tuple[list[list[int]], list[int]]:
    """Row echelon form and pivot columns of an integer matrix.

    The input is not modified; the returned rows are the fraction-free
    echelon matrix (row-swapped, unreduced above pivots).
    """
    m = [list(r) for r in rows]
    nrows = len(m)
    pivots: list[int] = []
    prev = 1
    r = 0
    for c in range(ncols):
        pr = -1
        for i in range(r, nrows):
            if m[i][c] != 0:
                pr = i
                break
        if pr < 0:
            continue
        if pr != r:
            m[r], m[pr] = m[pr], m[r]
        piv = m[r][c]
        for i in range(r + 1, nrows):
            row_i = m[i]
            row_r = m[r]
            x = row_i[c]
            if x == 0:
                if piv != prev:
                    for j in range(c + 1, ncols):
                        if row_i[j]:
                            row_i[j] = row_i[j] * piv // prev
            else:
                for j in range(c + 1, ncols):
                    row_i[j] = (piv * row_i[j] - x * row_r[j]) // prev
                row_i[c] = 0
        pivots.append(c)
        prev = piv
        r += 1
        if r == nrows:
            break
    return m, pivots


def rank(rows: list[list[int]], ncols: int) -> int:
    return len(echelon(rows, ncols)[1])
