"""Bilinear forms, signatures, and positivity tests — all exact.

A :class:`BilForm` is a nondegenerate bilinear form with the parity of a
weight-k polarization: symmetric for even k, antisymmetric for odd k.
Signatures of real symmetric matrices are computed by exact congruence
diagonalization; positive definiteness of Hermitian matrices by Sylvester's
leading-minor criterion.
"""
from __future__ import annotations

from .errors import VerificationError
from .matrices import Mat
from .scalars import GR, GaussianRational, as_scalar
from .subspaces import Subspace


class BilForm:
    """Nondegenerate bilinear form u^T M v of a fixed parity."""

    __slots__ = ("matrix", "parity")

    def __init__(self, matrix: Mat, parity: int):
        if not matrix.is_square():
            raise ValueError("form matrix must be square")
        parity = parity % 2
        mt = matrix.transpose()
        if parity == 0 and mt != matrix:
            raise ValueError("even-parity form must be symmetric")
        if parity == 1 and mt != -matrix:
            raise ValueError("odd-parity form must be antisymmetric")
        if matrix.rank() != matrix.nrows:
            raise ValueError("form matrix is degenerate")
        self.matrix = matrix
        self.parity = parity

    @property
    def dim(self) -> int:
        return self.matrix.nrows

    def __call__(self, u, v) -> GaussianRational:
        m = self.matrix
        uv = m.mv(v)
        acc = GR(0)
        for a, b in zip(u, uv):
            acc = acc + as_scalar(a) * b
        return acc

    def is_real(self) -> bool:
        return self.matrix.is_real()

    def gram(self, left: Subspace, right: Subspace) -> Mat:
        """Gram matrix of the form between two subspace bases."""
        bl = left.basis_matrix()
        br = right.basis_matrix()
        return bl.transpose() @ self.matrix @ br

    def restrict(self, s: Subspace) -> Mat:
        return self.gram(s, s)

    def orthogonal(self, left: Subspace, right: Subspace) -> bool:
        return self.gram(left, right).is_zero()

    def __eq__(self, other):
        if not isinstance(other, BilForm):
            return NotImplemented
        return self.parity == other.parity and self.matrix == other.matrix

    def __repr__(self):
        kind = "symmetric" if self.parity == 0 else "antisymmetric"
        return f"BilForm({kind}, dim {self.dim})"


def in_isometry_algebra(x: Mat, q: BilForm) -> bool:
    """Whether Q(Xu, v) + Q(u, Xv) = 0 identically."""
    m = q.matrix
    return (x.transpose() @ m + m @ x).is_zero()


def q_adjoint(t: Mat, q_src: BilForm, q_dst: BilForm) -> Mat:
    """The map A with Q_dst(T u, v) = Q_src(u, A v) for all u, v."""
    if t.nrows != q_dst.dim or t.ncols != q_src.dim:
        raise ValueError("adjoint shape mismatch")
    return q_src.matrix.inverse() @ t.transpose() @ q_dst.matrix


def signature(m: Mat) -> tuple[int, int]:
    """Signature (positives, negatives) of a real symmetric matrix.

    Exact symmetric congruence reduction.  A zero diagonal with a nonzero
    off-diagonal entry is handled by the usual row+column addition, which
    creates a nonzero diagonal entry in characteristic zero.
    """
    if not m.is_square():
        raise ValueError("signature of non-square matrix")
    if not m.is_real():
        raise ValueError("signature needs a real matrix")
    if m.transpose() != m:
        raise ValueError("signature needs a symmetric matrix")
    n = m.nrows
    work = [[GR.from_triple(e) for e in row] for row in m.t]
    pos = neg = 0
    for k in range(n):
        if work[k][k].is_zero():
            # try to swap in a nonzero diagonal entry
            swap = next((j for j in range(k + 1, n)
                         if not work[j][j].is_zero()), None)
            if swap is not None:
                for r in range(n):
                    work[r][k], work[r][swap] = work[r][swap], work[r][k]
                for c in range(n):
                    work[k][c], work[swap][c] = work[swap][c], work[k][c]
            else:
                off = next((j for j in range(k + 1, n)
                            if not work[k][j].is_zero()), None)
                if off is None:
                    continue  # row and the rest of its block are zero
                for c in range(n):
                    work[k][c] = work[k][c] + work[off][c]
                for r in range(n):
                    work[r][k] = work[r][k] + work[r][off]
        d = work[k][k]
        if d.is_zero():
            continue
        if d.re > 0:
            pos += 1
        else:
            neg += 1
        # replace the trailing block by its Schur complement
        colk = [work[r][k] for r in range(n)]
        rowk = list(work[k])
        for r in range(k + 1, n):
            if colk[r].is_zero():
                continue
            f = colk[r] / d
            for c in range(k + 1, n):
                if not rowk[c].is_zero():
                    work[r][c] = work[r][c] - f * rowk[c]
    return pos, neg


def is_hermitian(g: Mat) -> bool:
    return g.conj_transpose() == g


def hermitian_positive_definite(g: Mat) -> bool:
    """Sylvester criterion on an exact Hermitian matrix."""
    if not is_hermitian(g):
        return False
    n = g.nrows
    for k in range(1, n + 1):
        minor = Mat([row[:k] for row in [g.row(i) for i in range(k)]]).det()
        if not minor.is_real():
            raise VerificationError("principal minor of Hermitian matrix "
                                    "not real — arithmetic bug")
        if not minor.re > 0:
            return False
    return True
