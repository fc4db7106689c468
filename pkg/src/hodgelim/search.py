"""Randomized greedy search for maximal abelian horizontal families.

Each restart grows the cone span one direction at a time: draw a random
combination from the complement of the current family inside its own
centralizer, adjoin it, intersect the centralizer with the new element,
repeat.  The loop ends exactly when the family equals its centralizer,
so every restart terminates with a certificate of maximality.  Runs are
deterministic for a given seed: restart i uses its own stream seeded by
"seed:i", and the centralizer of the cone span is computed once.
"""
from __future__ import annotations

import random
from dataclasses import dataclass

from .endo import centralizer_in, operator_span, span_basis_mats
from .matrices import Mat
from .orbits import IVI, NilpotentOrbit, limit_context
from .scalars import GR, I
from .subspaces import Subspace

DEFAULT_POOL = (GR(0), GR(1), GR(-1), GR(2), I, GR(1) + I)


@dataclass(frozen=True)
class SearchConfig:
    restarts: int = 200
    seed: int | str = 0
    max_steps: int | None = None
    coefficient_pool: tuple = DEFAULT_POOL


@dataclass
class SearchResult:
    best: list[Mat]
    best_dim: int
    certified: bool
    restart_dims: list[int]
    config: SearchConfig

    def summary(self) -> str:
        lo, hi = min(self.restart_dims), max(self.restart_dims)
        return (f"best {self.best_dim} "
                f"({'certified maximal' if self.certified else 'uncertified'}"
                f"; {len(self.restart_dims)} restarts, dims {lo}..{hi})")


def greedy_max_abelian(orbit_like, config: SearchConfig | None = None,
                       context=None) -> SearchResult:
    """Grow the cone span into maximal abelian families, keeping the best.

    Accepts an orbit or a full family (whose cone is then the start).
    The result's ``certified`` flag reports whether the best family equals
    its centralizer in the horizontal part — by construction it always
    does, but the flag is re-derived from the final state, not assumed.
    """
    config = config or SearchConfig()
    if isinstance(orbit_like, IVI):
        orbit = orbit_like.orbit
    elif isinstance(orbit_like, NilpotentOrbit):
        orbit = orbit_like
    else:
        raise TypeError("search needs an orbit or a family")
    ctx = context or limit_context(orbit)
    n = orbit.ambient
    base = orbit.cone.span(n)
    if not base <= ctx.horizontal:
        raise ValueError("cone span is not horizontal")
    z_base = centralizer_in(ctx.horizontal, list(orbit.cone.generators), n) \
        if orbit.cone.r else ctx.horizontal

    pool = tuple(config.coefficient_pool)
    best: Subspace | None = None
    best_certified = False
    restart_dims: list[int] = []
    for restart in range(config.restarts):
        rng = random.Random(f"{config.seed}:{restart}")
        current = base
        z = z_base
        steps = 0
        while True:
            comp = current.complement_in(z)
            if comp.dim == 0:
                certified = True
                break
            if config.max_steps is not None and steps >= config.max_steps:
                certified = False
                break
            steps += 1
            coeffs = [rng.choice(pool) for _ in range(comp.dim)]
            while all(c.is_zero() for c in coeffs):
                coeffs = [rng.choice(pool) for _ in range(comp.dim)]
            x = Mat.zeros(n, n)
            for c, m in zip(coeffs, span_basis_mats(comp, n)):
                if not c.is_zero():
                    x = x + m * c
            current = current + operator_span([x], n)
            z = centralizer_in(z, [x], n)
        restart_dims.append(current.dim)
        if best is None or current.dim > best.dim:
            best = current
            best_certified = certified
    assert best is not None
    return SearchResult(span_basis_mats(best, n), best.dim,
                        best_certified, restart_dims, config)
