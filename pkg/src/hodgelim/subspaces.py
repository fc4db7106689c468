"""Canonical subspaces of C^n and exact quotients.

A :class:`Subspace` stores the reduced row echelon basis of its spanning
set, so two subspaces are equal as sets iff their stored bases are equal
syntactically.  All the usual lattice operations (sum, intersection,
inclusion, canonical complement) are exact.

:class:`Quotient` gives coordinates on ``sup/sub`` via a canonical
complement; because complements of real subspaces have real canonical
bases, entrywise conjugation of quotient coordinates is the induced real
structure whenever ``sub`` and ``sup`` are conjugation stable.
"""
from __future__ import annotations

from typing import Iterable, Sequence

from .matrices import (Mat, TMat, TVec, _coerce_row, t_hstack, t_identity,
                       t_kernel, t_matvec, t_rref)
from .scalars import (GR, GaussianRational, T_ONE, T_ZERO, t_add, t_conj,
                      t_is_zero, t_mul, t_neg, t_sub)


def _t_reduce(v: TVec, rows: Sequence[TVec], pivots: Sequence[int]):
    """Reduce v against RREF rows; return (residual, coefficients)."""
    r = list(v)
    coeffs = []
    for row, p in zip(rows, pivots):
        c = r[p]
        coeffs.append(c)
        if not t_is_zero(c):
            for j in range(p, len(r)):
                e = row[j]
                if not t_is_zero(e):
                    r[j] = t_sub(r[j], t_mul(c, e))
    return tuple(r), tuple(coeffs)


class Subspace:
    """A linear subspace of C^n in canonical (RREF) form."""

    __slots__ = ("ambient", "rows", "pivots")

    def __init__(self, ambient: int, rows: TMat, pivots: tuple[int, ...]):
        # internal: rows must already be canonical; use span() instead
        self.ambient = ambient
        self.rows = rows
        self.pivots = pivots

    @classmethod
    def span(cls, vectors: Iterable[Sequence], ambient: int) -> "Subspace":
        vecs = [_coerce_row(v) for v in vectors]
        for v in vecs:
            if len(v) != ambient:
                raise ValueError(
                    f"vector of length {len(v)} in ambient dim {ambient}")
        rows, pivots = t_rref(tuple(vecs))
        return cls(ambient, rows, tuple(pivots))

    @classmethod
    def zero(cls, ambient: int) -> "Subspace":
        return cls(ambient, (), ())

    @classmethod
    def full(cls, ambient: int) -> "Subspace":
        return cls(ambient, t_identity(ambient), tuple(range(ambient)))

    @property
    def dim(self) -> int:
        return len(self.rows)

    def is_zero(self) -> bool:
        return not self.rows

    def is_full(self) -> bool:
        return self.dim == self.ambient

    # -- membership ----------------------------------------------------

    def reduce(self, v) -> TVec:
        """Residual of v after elimination against the canonical basis."""
        tv = _coerce_row(v)
        if len(tv) != self.ambient:
            raise ValueError("vector length mismatch")
        return _t_reduce(tv, self.rows, self.pivots)[0]

    def contains(self, v) -> bool:
        return all(t_is_zero(e) for e in self.reduce(v))

    def coords(self, v) -> tuple[GaussianRational, ...]:
        """Coefficients of v in the canonical basis (raises if outside)."""
        tv = _coerce_row(v)
        res, coeffs = _t_reduce(tv, self.rows, self.pivots)
        if not all(t_is_zero(e) for e in res):
            raise ValueError("vector not in subspace")
        return tuple(GR.from_triple(c) for c in coeffs)

    # -- lattice operations --------------------------------------------

    def __le__(self, other: "Subspace") -> bool:
        if self.ambient != other.ambient:
            raise ValueError("ambient dimension mismatch")
        return all(other.contains(r) for r in self.rows)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient == other.ambient and self.rows == other.rows

    def __hash__(self):
        return hash((self.ambient, self.rows))

    def __add__(self, other: "Subspace") -> "Subspace":
        if self.ambient != other.ambient:
            raise ValueError("ambient dimension mismatch")
        return Subspace.span(list(self.rows) + list(other.rows), self.ambient)

    def __and__(self, other: "Subspace") -> "Subspace":
        """Intersection via the stacked-kernel method."""
        if self.ambient != other.ambient:
            raise ValueError("ambient dimension mismatch")
        if self.is_zero() or other.is_zero():
            return Subspace.zero(self.ambient)
        if self.is_full():
            return other
        if other.is_full():
            return self
        a, b = self.rows, other.rows
        stacked = tuple(
            tuple(r[i] for r in a) + tuple(t_neg(r[i]) for r in b)
            for i in range(self.ambient))
        combos = t_kernel(stacked, len(a) + len(b))
        vecs = []
        for combo in combos:
            v = [T_ZERO] * self.ambient
            for c, row in zip(combo[:len(a)], a):
                if not t_is_zero(c):
                    for j, e in enumerate(row):
                        if not t_is_zero(e):
                            v[j] = t_add(v[j], t_mul(c, e))
            vecs.append(tuple(v))
        return Subspace.span(vecs, self.ambient)

    def complement_in(self, sup: "Subspace") -> "Subspace":
        """A canonical complement of self inside sup.

        Built from the residuals of sup's canonical basis; every basis
        vector of the result has zeros in self's pivot columns, and the
        result is real whenever both inputs have real canonical bases.
        """
        if not self <= sup:
            raise ValueError("complement_in: first space not inside second")
        residuals = []
        for r in sup.rows:
            res, _ = _t_reduce(r, self.rows, self.pivots)
            if not all(t_is_zero(e) for e in res):
                residuals.append(res)
        comp = Subspace.span(residuals, self.ambient)
        assert comp.dim == sup.dim - self.dim
        return comp

    # -- structure maps ------------------------------------------------

    def conj(self) -> "Subspace":
        return Subspace.span(
            [tuple(t_conj(e) for e in r) for r in self.rows], self.ambient)

    def is_conj_stable(self) -> bool:
        return all(self.contains(tuple(t_conj(e) for e in r))
                   for r in self.rows)

    def has_real_basis(self) -> bool:
        return all(e[1] == 0 for r in self.rows for e in r)

    def map_by(self, m: Mat) -> "Subspace":
        """Image of this subspace under the linear map m."""
        if m.ncols != self.ambient:
            raise ValueError("operator shape mismatch")
        images = [t_matvec(m.t, r) for r in self.rows]
        return Subspace.span(images, m.nrows)

    # -- output --------------------------------------------------------

    def basis_vectors(self) -> list[tuple[GaussianRational, ...]]:
        return [tuple(GR.from_triple(e) for e in r) for r in self.rows]

    def basis_matrix(self) -> Mat:
        """n x dim matrix whose columns are the canonical basis."""
        if self.is_zero():
            return Mat.zeros(self.ambient, 0)
        return Mat.from_triples(
            tuple(tuple(r[i] for r in self.rows) for i in range(self.ambient)),
            self.dim)

    def __repr__(self):
        return f"Subspace(dim {self.dim} of C^{self.ambient})"


def image(m: Mat) -> Subspace:
    """Column space of a matrix."""
    return Subspace.span([m.col(j) for j in range(m.ncols)], m.nrows)


def kernel(m: Mat) -> Subspace:
    return Subspace.span(t_kernel(m.t, m.ncols), m.ncols)


def direct_sum_equals(parts: Sequence[Subspace], total: Subspace) -> bool:
    """True iff the parts are independent and sum to ``total``."""
    if not parts:
        return total.is_zero()
    acc = parts[0]
    dims = parts[0].dim
    for p in parts[1:]:
        acc = acc + p
        dims += p.dim
    return dims == acc.dim and acc == total


class Quotient:
    """Exact coordinates on sup/sub through a canonical complement."""

    __slots__ = ("sub", "sup", "complement", "_ttop", "_rank_sub")

    def __init__(self, sub: Subspace, sup: Subspace):
        self.sub = sub
        self.sup = sup
        self.complement = sub.complement_in(sup)
        n = sub.ambient
        cols = list(sub.rows) + list(self.complement.rows)
        self._rank_sub = len(sub.rows)
        if cols:
            b = tuple(tuple(c[i] for c in cols) for i in range(n))
            rows, pivots = t_rref(t_hstack(b, t_identity(n)))
            assert pivots[:len(cols)] == list(range(len(cols)))
            self._ttop = tuple(r[len(cols):] for r in rows[:len(cols)])
        else:
            self._ttop = ()

    @property
    def dim(self) -> int:
        return self.complement.dim

    def project_coords(self, v) -> TVec:
        """Coordinates of v + sub in the complement basis (v must lie in sup)."""
        tv = _coerce_row(v)
        if not self.sup.contains(tv):
            raise ValueError("vector not in the total space of the quotient")
        x = t_matvec(self._ttop, tv)
        return x[self._rank_sub:]

    def lift(self, coords) -> TVec:
        """The canonical representative with the given quotient coordinates."""
        tc = _coerce_row(coords)
        v = [T_ZERO] * self.sub.ambient
        for c, row in zip(tc, self.complement.rows):
            if not t_is_zero(c):
                for j, e in enumerate(row):
                    if not t_is_zero(e):
                        v[j] = t_add(v[j], t_mul(c, e))
        return tuple(v)

    def induced_matrix(self, op: Mat, dst: "Quotient | None" = None) -> Mat:
        """Matrix of the map induced by op from this quotient to dst.

        ``op`` must map sup into dst.sup and sub into dst.sub (the caller's
        responsibility; projection fails loudly if sup is not preserved).
        """
        if dst is None:
            dst = self
        cols = [dst.project_coords(t_matvec(op.t, c))
                for c in self.complement.rows]
        if not cols:
            return Mat.zeros(dst.dim, 0)
        return Mat.from_triples(
            tuple(tuple(c[i] for c in cols) for i in range(dst.dim)), self.dim)
