"""Pure Python computational kernels.

Matrices are lists of rows; every entry is a normalized integer triple
``(a, b, d)`` meaning ``(a + b*i)/d``.  The arithmetic helpers are inlined
here (rather than imported from :mod:`hodgelim.scalars`) so this module and
the compiled twin ``_kernels_cy.pyx`` stay self-contained and line-for-line
comparable.
"""
from math import gcd

BACKEND_NAME = "python"


def _norm(a, b, d):
    if d < 0:
        a, b, d = -a, -b, -d
    g = gcd(gcd(a, b), d)
    if g > 1:
        return (a // g, b // g, d // g)
    return (a, b, d)


def _add(x, y):
    a1, b1, d1 = x
    a2, b2, d2 = y
    return _norm(a1 * d2 + a2 * d1, b1 * d2 + b2 * d1, d1 * d2)


def _mul(x, y):
    a1, b1, d1 = x
    a2, b2, d2 = y
    return _norm(a1 * a2 - b1 * b2, a1 * b2 + a2 * b1, d1 * d2)


def _sub_mul(x, f, y):
    """x - f*y in one normalization pass."""
    a1, b1, d1 = x
    fa, fb, fd = f
    a2, b2, d2 = y
    pa = fa * a2 - fb * b2
    pb = fa * b2 + fb * a2
    pd = fd * d2
    return _norm(a1 * pd - pa * d1, b1 * pd - pb * d1, d1 * pd)


def _inv(x):
    a, b, d = x
    n = a * a + b * b
    return _norm(d * a, -d * b, n)


def rref(rows):
    """Reduced row echelon form.

    Takes a list of triple-rows, returns ``(reduced_rows, pivot_cols)``
    where ``reduced_rows`` contains only the nonzero rows.  The result is
    the canonical RREF: leading entries are 1, pivot columns are cleared
    above and below.
    """
    if not rows:
        return [], []
    work = [list(r) for r in rows]
    nrows = len(work)
    ncols = len(work[0])
    pivots = []
    rank = 0
    for col in range(ncols):
        pr = -1
        for r in range(rank, nrows):
            e = work[r][col]
            if e[0] != 0 or e[1] != 0:
                pr = r
                break
        if pr < 0:
            continue
        work[rank], work[pr] = work[pr], work[rank]
        prow = work[rank]
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
            row = work[r]
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
    return [tuple(r) for r in work[:rank]], pivots


def matmul(A, B):
    """Product of two triple-matrices (list-of-rows layout)."""
    n = len(A)
    if n == 0:
        return []
    k = len(A[0])
    if k != len(B):
        raise ValueError(f"shape mismatch: {n}x{k} @ {len(B)}x?")
    m = len(B[0]) if k else 0
    zero = (0, 0, 1)
    out = []
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
