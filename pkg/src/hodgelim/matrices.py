"""Exact matrices over Q(i).

Two layers live here.  The triple layer (functions prefixed ``t_``) works on
immutable tuples-of-rows of scalar triples and is what the rest of the
package uses on hot paths.  :class:`Mat` is the friendly wrapper: immutable,
hashable, with operator overloading and the usual constructors.
"""
from __future__ import annotations

from typing import Iterable, Sequence

from . import backend
from .scalars import (GR, GaussianRational, Triple, T_ONE, T_ZERO, as_scalar,
                      t_add, t_conj, t_inv, t_is_zero, t_mul, t_neg, t_sub)

TMat = tuple[tuple[Triple, ...], ...]
TVec = tuple[Triple, ...]


# ---------------------------------------------------------------------------
# triple-layer helpers
# ---------------------------------------------------------------------------

def t_identity(n: int) -> TMat:
    return tuple(tuple(T_ONE if i == j else T_ZERO for j in range(n))
                 for i in range(n))


def t_zeros(m: int, n: int) -> TMat:
    row = (T_ZERO,) * n
    return tuple(row for _ in range(m))


def t_transpose(tm: TMat) -> TMat:
    return tuple(zip(*tm)) if tm else ()


def t_conj_mat(tm: TMat) -> TMat:
    return tuple(tuple(t_conj(e) for e in row) for row in tm)


def t_neg_mat(tm: TMat) -> TMat:
    return tuple(tuple(t_neg(e) for e in row) for row in tm)


def t_add_mat(a: TMat, b: TMat) -> TMat:
    return tuple(tuple(t_add(x, y) for x, y in zip(ra, rb))
                 for ra, rb in zip(a, b))


def t_sub_mat(a: TMat, b: TMat) -> TMat:
    return tuple(tuple(t_sub(x, y) for x, y in zip(ra, rb))
                 for ra, rb in zip(a, b))


def t_scale(tm: TMat, c: Triple) -> TMat:
    return tuple(tuple(t_mul(c, e) for e in row) for row in tm)


def t_matmul(a: TMat, b: TMat) -> TMat:
    return tuple(backend.matmul(a, b))


def t_matvec(tm: TMat, v: TVec) -> TVec:
    out = []
    for row in tm:
        acc = T_ZERO
        for e, x in zip(row, v):
            if not t_is_zero(e) and not t_is_zero(x):
                acc = t_add(acc, t_mul(e, x))
        out.append(acc)
    return tuple(out)


def t_rref(tm) -> tuple[TMat, list[int]]:
    rows, pivots = backend.rref(list(tm))
    return tuple(rows), pivots


def t_is_zero_mat(tm: TMat) -> bool:
    return all(t_is_zero(e) for row in tm for e in row)


def t_kernel(tm: TMat, ncols: int) -> list[TVec]:
    """Basis of the right null space, as length-``ncols`` vectors.

    Standard parametrization: one vector per free column, with a 1 in the
    free position and back-filled pivot entries.
    """
    rows, pivots = t_rref(tm)
    pivset = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        v = [T_ZERO] * ncols
        v[free] = T_ONE
        for i, p in enumerate(pivots):
            v[p] = t_neg(rows[i][free])
        basis.append(tuple(v))
    return basis


def t_hstack(a: TMat, b: TMat) -> TMat:
    if not a:
        return b
    if not b:
        return a
    return tuple(ra + rb for ra, rb in zip(a, b))


def t_vstack(mats: Sequence[TMat]) -> TMat:
    out = []
    for m in mats:
        out.extend(m)
    return tuple(out)


def t_from_cols(cols: Sequence[TVec], nrows: int) -> TMat:
    if not cols:
        return tuple(() for _ in range(nrows))
    return tuple(tuple(c[i] for c in cols) for i in range(nrows))


# ---------------------------------------------------------------------------
# Mat
# ---------------------------------------------------------------------------

def _coerce_row(row) -> tuple[Triple, ...]:
    out = []
    for x in row:
        if isinstance(x, tuple) and len(x) == 3 and isinstance(x[0], int):
            out.append(x)
        else:
            out.append(as_scalar(x).triple)
    return tuple(out)


class Mat:
    """Immutable exact matrix.  Entries coerce from int/Fraction/GR."""

    __slots__ = ("t", "shape")

    def __init__(self, rows: Iterable[Iterable]):
        t = tuple(_coerce_row(r) for r in rows)
        widths = {len(r) for r in t}
        if len(widths) > 1:
            raise ValueError("ragged rows")
        self.t = t
        self.shape = (len(t), widths.pop() if widths else 0)

    @classmethod
    def from_triples(cls, tm: TMat, ncols: int | None = None) -> "Mat":
        self = object.__new__(cls)
        self.t = tm
        self.shape = (len(tm), len(tm[0]) if tm else (ncols or 0))
        return self

    @classmethod
    def identity(cls, n: int) -> "Mat":
        return cls.from_triples(t_identity(n))

    @classmethod
    def zeros(cls, m: int, n: int) -> "Mat":
        self = object.__new__(cls)
        self.t = t_zeros(m, n)
        self.shape = (m, n)
        return self

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence]) -> "Mat":
        tcols = [_coerce_row(c) for c in cols]
        if not tcols:
            raise ValueError("from_columns needs at least one column")
        n = len(tcols[0])
        return cls.from_triples(t_from_cols(tcols, n))

    @property
    def nrows(self) -> int:
        return self.shape[0]

    @property
    def ncols(self) -> int:
        return self.shape[1]

    def __getitem__(self, ij) -> GaussianRational:
        i, j = ij
        return GR.from_triple(self.t[i][j])

    def row(self, i) -> tuple[GaussianRational, ...]:
        return tuple(GR.from_triple(e) for e in self.t[i])

    def col(self, j) -> tuple[GaussianRational, ...]:
        return tuple(GR.from_triple(r[j]) for r in self.t)

    def columns(self) -> list[tuple[GaussianRational, ...]]:
        return [self.col(j) for j in range(self.ncols)]

    # -- algebra -------------------------------------------------------

    def _check_same_shape(self, other):
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch: {self.shape} vs {other.shape}")

    def __add__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        self._check_same_shape(other)
        return Mat.from_triples(t_add_mat(self.t, other.t), self.ncols)

    def __sub__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        self._check_same_shape(other)
        return Mat.from_triples(t_sub_mat(self.t, other.t), self.ncols)

    def __neg__(self):
        return Mat.from_triples(t_neg_mat(self.t), self.ncols)

    def __mul__(self, c):
        try:
            trip = as_scalar(c).triple
        except TypeError:
            return NotImplemented
        return Mat.from_triples(t_scale(self.t, trip), self.ncols)

    __rmul__ = __mul__

    def __matmul__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch: {self.shape} @ {other.shape}")
        out = t_matmul(self.t, other.t)
        return Mat.from_triples(out, other.ncols)

    def mv(self, v) -> tuple[GaussianRational, ...]:
        """Matrix times column vector (any scalar-like sequence)."""
        tv = _coerce_row(v)
        if len(tv) != self.ncols:
            raise ValueError("vector length mismatch")
        return tuple(GR.from_triple(e) for e in t_matvec(self.t, tv))

    def transpose(self) -> "Mat":
        return Mat.from_triples(t_transpose(self.t), self.nrows)

    def conj(self) -> "Mat":
        return Mat.from_triples(t_conj_mat(self.t), self.ncols)

    def conj_transpose(self) -> "Mat":
        return self.conj().transpose()

    def pow(self, k: int) -> "Mat":
        if self.nrows != self.ncols:
            raise ValueError("pow of non-square matrix")
        if k < 0:
            raise ValueError("negative power")
        out = t_identity(self.nrows)
        base = self.t
        while k:
            if k & 1:
                out = t_matmul(out, base)
            base = t_matmul(base, base) if k > 1 else base
            k >>= 1
        return Mat.from_triples(out, self.nrows)

    def trace(self) -> GaussianRational:
        acc = T_ZERO
        for i in range(min(self.shape)):
            acc = t_add(acc, self.t[i][i])
        return GR.from_triple(acc)

    # -- predicates ----------------------------------------------------

    def is_zero(self) -> bool:
        return t_is_zero_mat(self.t)

    def is_real(self) -> bool:
        return all(e[1] == 0 for row in self.t for e in row)

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def __eq__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        return self.shape == other.shape and self.t == other.t

    def __hash__(self):
        return hash((self.shape, self.t))

    # -- elimination-based operations ---------------------------------

    def rref(self) -> tuple["Mat", list[int]]:
        rows, pivots = t_rref(self.t)
        return Mat.from_triples(rows, self.ncols), pivots

    def rank(self) -> int:
        return len(t_rref(self.t)[1])

    def kernel(self) -> list[tuple[GaussianRational, ...]]:
        """Basis for the right null space as column vectors."""
        return [tuple(GR.from_triple(e) for e in v)
                for v in t_kernel(self.t, self.ncols)]

    def image_columns(self) -> list[tuple[GaussianRational, ...]]:
        """The pivot columns of the matrix (a basis of the column space)."""
        _, pivots = t_rref(self.t)
        return [self.col(j) for j in pivots]

    def inverse(self) -> "Mat":
        if self.nrows != self.ncols:
            raise ValueError("inverse of non-square matrix")
        n = self.nrows
        aug = t_hstack(self.t, t_identity(n))
        rows, pivots = t_rref(aug)
        if pivots != list(range(n)):
            raise ZeroDivisionError("matrix is singular")
        return Mat.from_triples(tuple(r[n:] for r in rows), n)

    def det(self) -> GaussianRational:
        if self.nrows != self.ncols:
            raise ValueError("det of non-square matrix")
        n = self.nrows
        work = [list(r) for r in self.t]
        sign = 1
        acc = T_ONE
        for col in range(n):
            pr = -1
            for r in range(col, n):
                if not t_is_zero(work[r][col]):
                    pr = r
                    break
            if pr < 0:
                return GR.from_triple(T_ZERO)
            if pr != col:
                work[col], work[pr] = work[pr], work[col]
                sign = -sign
            piv = work[col][col]
            acc = t_mul(acc, piv)
            pinv = t_inv(piv)
            for r in range(col + 1, n):
                f = work[r][col]
                if t_is_zero(f):
                    continue
                f = t_mul(f, pinv)
                for j in range(col, n):
                    work[r][j] = t_sub(work[r][j], t_mul(f, work[col][j]))
        if sign < 0:
            acc = t_neg(acc)
        return GR.from_triple(acc)

    def solve(self, b) -> tuple[GaussianRational, ...] | None:
        """One solution of ``self @ x = b`` or None if inconsistent.

        Intended for full-column-rank systems (then the solution is the
        unique one); free variables, if any, are set to zero.
        """
        tb = _coerce_row(b)
        aug = t_hstack(self.t, tuple((e,) for e in tb))
        rows, pivots = t_rref(aug)
        if self.ncols in pivots:
            return None
        x = [T_ZERO] * self.ncols
        for i, p in enumerate(pivots):
            x[p] = rows[i][self.ncols]
        return tuple(GR.from_triple(e) for e in x)

    # -- display -------------------------------------------------------

    def __repr__(self):
        return f"Mat({self.nrows}x{self.ncols})"

    def __str__(self):
        lines = []
        for row in self.t:
            lines.append("[" + ", ".join(str(GR.from_triple(e)) for e in row) + "]")
        return "[" + ",\n ".join(lines) + "]"


def commutator(x: Mat, y: Mat) -> Mat:
    return x @ y - y @ x
