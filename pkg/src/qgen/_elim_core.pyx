# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled fraction-free elimination kernel (64-bit with overflow escape).

Same contract as ``_elim_py``: single-step fraction-free Gaussian
elimination with deterministic pivoting.  All arithmetic runs on C
int64 with 128-bit intermediates; any value that leaves the int64 range
(including the input conversion) raises OverflowError, and callers fall
back to the pure big-integer implementation.
"""

from libc.stdlib cimport free, malloc

ctypedef long long i64

cdef extern from *:
    ctypedef long long i128 "__int128"

cdef i64 I64_MAX = <i64> 0x7FFFFFFFFFFFFFFF
cdef i64 I64_MIN = (<i64> -I64_MAX) - 1


cdef inline i64 _narrow(i128 v) except? -2:
    if v > <i128> I64_MAX or v < <i128> I64_MIN:
        raise OverflowError("entry exceeds 64 bits")
    return <i64> v


cdef i64* _load(object rows, Py_ssize_t nrows, Py_ssize_t ncols) except NULL:
    cdef i64 *m = <i64*> malloc(nrows * ncols * sizeof(i64))
    if m == NULL:
        raise MemoryError()
    cdef Py_ssize_t i, j
    cdef object row
    try:
        for i in range(nrows):
            row = rows[i]
            if len(row) != ncols:
                raise ValueError("ragged matrix")
            for j in range(ncols):
                m[i * ncols + j] = row[j]  # OverflowError on wide ints
    except BaseException:
        free(m)
        raise
    return m


cdef Py_ssize_t _eliminate(i64 *m, Py_ssize_t nrows, Py_ssize_t ncols,
                           Py_ssize_t *pivots) except -1:
    cdef Py_ssize_t r = 0, c, i, j, pr
    cdef i64 prev = 1, piv, x, tmp
    cdef i128 t
    cdef Py_ssize_t npiv = 0
    for c in range(ncols):
        pr = -1
        for i in range(r, nrows):
            if m[i * ncols + c] != 0:
                pr = i
                break
        if pr < 0:
            continue
        if pr != r:
            for j in range(ncols):
                tmp = m[r * ncols + j]
                m[r * ncols + j] = m[pr * ncols + j]
                m[pr * ncols + j] = tmp
        piv = m[r * ncols + c]
        for i in range(r + 1, nrows):
            x = m[i * ncols + c]
            if x == 0:
                if piv != prev:
                    for j in range(c + 1, ncols):
                        if m[i * ncols + j] != 0:
                            t = <i128> piv * m[i * ncols + j]
                            if t % prev != 0:
                                raise ArithmeticError("inexact division")
                            m[i * ncols + j] = _narrow(t / prev)
            else:
                for j in range(c + 1, ncols):
                    t = <i128> piv * m[i * ncols + j] - <i128> x * m[r * ncols + j]
                    if t % prev != 0:
                        raise ArithmeticError("inexact division")
                    m[i * ncols + j] = _narrow(t / prev)
                m[i * ncols + c] = 0
        pivots[npiv] = c
        npiv += 1
        prev = piv
        r += 1
        if r == nrows:
            break
    return npiv


def rank(rows, Py_ssize_t ncols):
    """Exact rank of an integer matrix given as a list of row lists."""
    cdef Py_ssize_t nrows = len(rows)
    if nrows == 0 or ncols == 0:
        return 0
    cdef i64 *m = _load(rows, nrows, ncols)
    cdef Py_ssize_t *piv = <Py_ssize_t*> malloc(ncols * sizeof(Py_ssize_t))
    if piv == NULL:
        free(m)
        raise MemoryError()
    cdef Py_ssize_t npiv
    try:
        npiv = _eliminate(m, nrows, ncols, piv)
    finally:
        free(m)
        free(piv)
    return npiv


def echelon(rows, Py_ssize_t ncols):
    """Echelon rows and pivot columns; mirrors ``_elim_py.echelon``."""
    cdef Py_ssize_t nrows = len(rows)
    if nrows == 0 or ncols == 0:
        return [list(r) for r in rows], []
    cdef i64 *m = _load(rows, nrows, ncols)
    cdef Py_ssize_t *piv = <Py_ssize_t*> malloc(ncols * sizeof(Py_ssize_t))
    if piv == NULL:
        free(m)
        raise MemoryError()
    cdef Py_ssize_t npiv, i, j
    try:
        npiv = _eliminate(m, nrows, ncols, piv)
        out = [[m[i * ncols + j] for j in range(ncols)] for i in range(nrows)]
        pivots = [piv[i] for i in range(npiv)]
    finally:
        free(m)
        free(piv)
    return out, pivots
