"""Spaces of linear operators, seen as subspaces of C^(n*n).

Operators are flattened row-major: ``vec(X)[i*n + j] = X[i][j]``.  This is
the coordinate convention of every serialized operator subspace in the
package.  The workhorse is :func:`solve_in_span` — cut a span of operators
by linear conditions — which gives centralizers and the isometry algebra of
a form in one step each.
"""
from __future__ import annotations

from typing import Callable, Sequence

from .forms import BilForm
from .matrices import Mat, TVec
from .subspaces import Subspace


def flatten(m: Mat) -> TVec:
    return tuple(e for row in m.t for e in row)


def unflatten(v, n: int) -> Mat:
    if len(v) != n * n:
        raise ValueError(f"flattened length {len(v)} is not {n}x{n}")
    from .matrices import _coerce_row
    tv = _coerce_row(v)
    return Mat.from_triples(tuple(tv[i * n:(i + 1) * n] for i in range(n)), n)


def operator_span(mats: Sequence[Mat], n: int) -> Subspace:
    """The span of the given operators inside flattened C^(n*n)."""
    return Subspace.span([flatten(m) for m in mats], n * n)


def span_basis_mats(space: Subspace, n: int) -> list[Mat]:
    """Canonical basis of a flattened operator subspace, as matrices."""
    return [Mat.from_triples(tuple(r[i * n:(i + 1) * n] for i in range(n)), n)
            for r in space.rows]


def solve_in_span(space: Subspace, n: int,
                  conditions: Callable[[Mat], Sequence[Mat]]) -> Subspace:
    """Largest subspace of ``space`` on which all conditions vanish.

    ``conditions(X)`` must return matrices depending linearly on X; the
    result is {X in space : conditions(X) == 0}, again in flattened form.
    """
    basis = span_basis_mats(space, n)
    if not basis:
        return space
    cols = []
    for b in basis:
        out = []
        for c in conditions(b):
            out.extend(flatten(c))
        cols.append(tuple(out))
    stacked = tuple(tuple(col[i] for col in cols) for i in range(len(cols[0])))
    from .matrices import t_kernel
    from .scalars import GR, t_is_zero
    combos = t_kernel(stacked, len(basis))
    vecs = []
    for combo in combos:
        acc = Mat.zeros(n, n)
        for c, b in zip(combo, basis):
            if not t_is_zero(c):
                acc = acc + b * GR.from_triple(c)
        vecs.append(flatten(acc))
    return Subspace.span(vecs, n * n)


def isometry_algebra(q: BilForm) -> Subspace:
    """All X with X^T M + M X = 0, as a flattened subspace."""
    n = q.dim
    m = q.matrix
    return solve_in_span(
        Subspace.full(n * n), n,
        lambda x: [x.transpose() @ m + m @ x])


def centralizer_in(space: Subspace, mats: Sequence[Mat], n: int) -> Subspace:
    """{X in space : [X, A] = 0 for all given A}."""
    mats = list(mats)
    if not mats:
        return space
    return solve_in_span(
        space, n,
        lambda x: [x @ a - a @ x for a in mats])


def pairwise_commuting(mats: Sequence[Mat]) -> bool:
    for i, a in enumerate(mats):
        for b in mats[i + 1:]:
            if not (a @ b - b @ a).is_zero():
                return False
    return True
