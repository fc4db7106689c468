# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled computational kernels.

Same algorithm and data layout as ``_kernels_py`` (rows of normalized
``(a, b, d)`` integer triples); entries stay Python ints so exact values of
arbitrary size are preserved, the win comes from compiled loop and call
overhead.
"""
from math import gcd

BACKEND_NAME = "cython"


cdef inline tuple _norm(object a, object b, object d):
    cdef object g
    if d < 0:
        a = -a
        b = -b
        d = -d
    g = gcd(gcd(a, b), d)
    if g > 1:
        return (a // g, b // g, d // g)
    return (a, b, d)


cdef inline tuple _add(tuple x, tuple y):
    cdef object a1 = x[0], b1 = x[1], d1 = x[2]
    cdef object a2 = y[0], b2 = y[1], d2 = y[2]
    return _norm(a1 * d2 + a2 * d1, b1 * d2 + b2 * d1, d1 * d2)


cdef inline tuple _mul(tuple x, tuple y):
    cdef object a1 = x[0], b1 = x[1], d1 = x[2]
    cdef object a2 = y[0], b2 = y[1], d2 = y[2]
    return _norm(a1 * a2 - b1 * b2, a1 * b2 + a2 * b1, d1 * d2)


cdef inline tuple _sub_mul(tuple x, tuple f, tuple y):
    # x - f*y in one normalization pass
    cdef object a1 = x[0], b1 = x[1], d1 = x[2]
    cdef object fa = f[0], fb = f[1], fd = f[2]
    cdef object a2 = y[0], b2 = y[1], d2 = y[2]
    cdef object pa = fa * a2 - fb * b2
    cdef object pb = fa * b2 + fb * a2
    cdef object pd = fd * d2
    return _norm(a1 * pd - pa * d1, b1 * pd - pb * d1, d1 * pd)


cdef inline tuple _inv(tuple x):
    cdef object a = x[0], b = x[1], d = x[2]
    cdef object n = a * a + b * b
    return _norm(d * a, -d * b, n)


def rref(rows):
    """Reduced row echelon form; see the pure twin for the contract."""
    if not rows:
        return [], []
    cdef list work = [list(rw) for rw in rows]
    cdef Py_ssize_t nrows = len(work)
    cdef Py_ssize_t ncols = len(work[0])
    cdef list pivots = []
    cdef Py_ssize_t rank = 0
    cdef Py_ssize_t col, r, j, pr
    cdef list prow, row
    cdef tuple piv, pinv, f, e
    for col in range(ncols):
        pr = -1
        for r in range(rank, nrows):
            e = (<list>work[r])[col]
            if e[0] != 0 or e[1] != 0:
                pr = r
                break
        if pr < 0:
            continue
        work[rank], work[pr] = work[pr], work[rank]
        prow = <list>work[rank]
        piv = prow[col]
        if piv != (1, 0, 1):
            pinv = _inv(piv)
            for j in range(col, ncols):
                e = prow[j]
                if e[0] != 0 or e[1] != 0:
                    prow[j] = _mul(e, pinv)
        for r in range(nrows):
            if r == rank:
                continue
            row = <list>work[r]
            f = row[col]
            if f[0] == 0 and f[1] == 0:
                continue
            row[col] = (0, 0, 1)
            for j in range(col + 1, ncols):
                e = prow[j]
                if e[0] != 0 or e[1] != 0:
                    row[j] = _sub_mul(row[j], f, e)
        pivots.append(col)
        rank += 1
        if rank == nrows:
            break
    return [tuple(rw) for rw in work[:rank]], pivots


def matmul(A, B):
    """Product of two triple-matrices (list-of-rows layout)."""
    cdef Py_ssize_t n = len(A)
    if n == 0:
        return []
    cdef Py_ssize_t k = len(A[0])
    if k != len(B):
        raise ValueError(f"shape mismatch: {n}x{k} @ {len(B)}x?")
    cdef Py_ssize_t m = len(B[0]) if k else 0
    cdef tuple zero = (0, 0, 1)
    cdef list out = []
    cdef Py_ssize_t i, t, j
    cdef tuple f, e
    cdef list orow
    for i in range(n):
        arow = A[i]
        orow = [zero] * m
        for t in range(k):
            f = arow[t]
            if f[0] == 0 and f[1] == 0:
                continue
            brow = B[t]
            for j in range(m):
                e = brow[j]
                if e[0] != 0 or e[1] != 0:
                    orow[j] = _add(orow[j], _mul(f, e))
        out.append(tuple(orow))
    return out
