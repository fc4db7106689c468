"""Nilpotent orbits at infinity and their abelian enlargements.

A cone of commuting real nilpotents together with a Hodge-type filtration
describes a degenerating family; the limit carries a mixed Hodge structure
polarized on primitive graded pieces.  An IVI (infinitesimal variation of
Hodge structure at infinity) enlarges the cone to an abelian subspace of
the horizontal part of the isometry algebra.  This module verifies both
notions, integrates an IVI into a polynomial period map, and certifies
maximality by a centralizer computation.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Mapping, Sequence

from .endo import (centralizer_in, isometry_algebra, operator_span,
                   pairwise_commuting, span_basis_mats)
from .errors import VerificationError
from .filtrations import (DecFiltration, IncFiltration, shift_filtration,
                          verify_phs, weight_filtration)
from .forms import BilForm, in_isometry_algebra
from .matrices import Mat
from .mixed import deligne_bigrading, filtration_lowering, verify_pmhs
from .reports import Report
from .scalars import GR, as_scalar
from .subspaces import Subspace


@dataclass(frozen=True)
class NilpotentCone:
    """A finite set of commuting real nilpotent generators (possibly empty)."""

    generators: tuple[Mat, ...]

    def __post_init__(self):
        gens = tuple(self.generators)
        object.__setattr__(self, "generators", gens)
        dims = {g.nrows for g in gens} | {g.ncols for g in gens}
        if len(dims) > 1:
            raise ValueError("cone generators of mixed sizes")

    @property
    def r(self) -> int:
        return len(self.generators)

    def span(self, n: int) -> Subspace:
        return operator_span(self.generators, n)

    def element(self, coefficients: Sequence) -> Mat:
        if self.r == 0:
            raise ValueError("the empty cone has no elements")
        if len(coefficients) != self.r:
            raise ValueError("coefficient count does not match generators")
        acc = Mat.zeros(self.generators[0].nrows, self.generators[0].ncols)
        for c, g in zip(coefficients, self.generators):
            acc = acc + g * as_scalar(c)
        return acc

    def barycenter(self) -> Mat:
        return self.element([1] * self.r)


@dataclass(frozen=True)
class NilpotentOrbit:
    """Limit data: weight, polarization form, filtration and a cone."""

    weight: int
    form: BilForm
    filtration: DecFiltration
    cone: NilpotentCone

    def __post_init__(self):
        n = self.form.dim
        if self.filtration.ambient != n:
            raise ValueError("filtration and form dimensions differ")
        for g in self.cone.generators:
            if g.nrows != n:
                raise ValueError("cone generators do not act on the space")

    @property
    def ambient(self) -> int:
        return self.form.dim

    def limit_weight_filtration(self) -> IncFiltration:
        """W of the generic cone element, recentered at the weight."""
        if self.cone.r == 0:
            return IncFiltration({self.weight: Subspace.full(self.ambient)})
        return shift_filtration(
            weight_filtration(self.cone.barycenter()), -self.weight)


@dataclass(frozen=True)
class IVI:
    """An abelian family of horizontal directions containing the cone."""

    orbit: NilpotentOrbit
    family: tuple[Mat, ...]

    def __post_init__(self):
        object.__setattr__(self, "family", tuple(self.family))
        n = self.orbit.ambient
        for m in self.family:
            if m.nrows != n or m.ncols != n:
                raise ValueError("family matrices do not act on the space")

    @property
    def dim(self) -> int:
        return self.span().dim

    def span(self) -> Subspace:
        return operator_span(self.family, self.orbit.ambient)


# ---------------------------------------------------------------------------
# limit context shared by the verifiers and the search
# ---------------------------------------------------------------------------

@dataclass
class LimitContext:
    """Everything the limit mixed Hodge structure determines at once."""

    orbit: NilpotentOrbit
    w: IncFiltration
    bigrading: object
    algebra: Subspace
    horizontal: Subspace  # the degree -1 part of the algebra


def limit_context(orbit: NilpotentOrbit) -> LimitContext:
    w = orbit.limit_weight_filtration()
    vb = deligne_bigrading(w, orbit.filtration)
    g = isometry_algebra(orbit.form)
    hor = filtration_lowering(vb, g, -1)
    return LimitContext(orbit, w, vb, g, hor)


# ---------------------------------------------------------------------------
# verification
# ---------------------------------------------------------------------------

def _interior_samples(r: int, extra=None):
    """Deterministic positive sample points in the open cone."""
    samples = [(1,) * r]
    if r <= 5:
        samples.extend(p for p in itertools.product((1, 2), repeat=r)
                       if p != (1,) * r)
    else:
        samples.extend(tuple(1 + ((j * 7 + i) % 2) for i in range(r))
                       for j in range(1, 32))
    if extra:
        samples.extend(tuple(p) for p in extra)
    return samples


def verify_orbit(orbit: NilpotentOrbit, extra_samples=None) -> Report:
    """Check the defining conditions of a nilpotent orbit at infinity.

    Needs at least one generator; a pure structure (empty cone) has no
    orbit to verify — use verify_ivi, which handles that case.
    """
    if orbit.cone.r == 0:
        raise ValueError("orbit verification needs a nonempty cone")
    rep = Report(f"nilpotent orbit (weight {orbit.weight}, "
                 f"{orbit.cone.r} generators)")
    k = orbit.weight
    gens = orbit.cone.generators
    rep.add("generators are real", all(g.is_real() for g in gens))
    rep.add("generators commute pairwise", pairwise_commuting(gens))
    rep.add(f"generators satisfy N^{k + 1} = 0",
            all(g.pow(k + 1).is_zero() for g in gens))
    rep.add("generators preserve the form infinitesimally",
            all(in_isometry_algebra(g, orbit.form) for g in gens))
    f = orbit.filtration
    lowers = all(f.at(p).map_by(g) <= f.at(p - 1)
                 for g in gens
                 for p in range(f.keys[0], f.keys[-1] + 1))
    rep.add("generators lower the filtration by one", lowers)
    if not rep.ok:
        return rep

    samples = _interior_samples(orbit.cone.r, extra_samples)
    base = None
    constant = True
    nilpotent = True
    for s in samples:
        ns = orbit.cone.element(s)
        if not ns.pow(k + 1).is_zero():
            nilpotent = False
            break
        ws = weight_filtration(ns)
        if base is None:
            base = ws
        elif ws != base:
            constant = False
            break
    rep.add(f"interior elements satisfy N^{k + 1} = 0", nilpotent,
            samples=len(samples))
    if not nilpotent:
        return rep
    rep.add("weight filtration constant on the sampled interior", constant)
    if not constant:
        return rep

    w = shift_filtration(base, -k)
    rep.data["limit_weight_dims"] = {
        str(l): w.at(l).dim for l in w.support()}
    rep.extend(verify_pmhs(k, orbit.form, w, f, orbit.cone.barycenter()),
               prefix="limit: ")
    return rep


def verify_ivi(ivi: IVI, extra_samples=None) -> Report:
    """Check an abelian family at infinity, cone included."""
    orbit = ivi.orbit
    rep = Report(f"family at infinity (dim {len(ivi.family)})")
    if orbit.cone.r > 0:
        rep.extend(verify_orbit(orbit, extra_samples), prefix="orbit: ")
    else:
        rep.extend(verify_phs(orbit.filtration, orbit.weight, orbit.form),
                   prefix="pure: ")
    if not rep.ok:
        return rep

    n = orbit.ambient
    span = ivi.span()
    rep.add("family is linearly independent",
            span.dim == len(ivi.family), dim=span.dim)
    rep.add("family commutes pairwise", pairwise_commuting(ivi.family))
    if orbit.cone.r:
        rep.add("cone lies inside the family",
                orbit.cone.span(n) <= span)
    ctx = limit_context(orbit)
    rep.add("family is horizontal of degree -1", span <= ctx.horizontal,
            horizontal_dim=ctx.horizontal.dim)
    rep.data["dim"] = span.dim
    return rep


def verify_maximality(ivi: IVI) -> Report:
    """Certify that the family is maximal abelian in the horizontal part.

    The family is maximal abelian iff it equals its own centralizer there:
    any element of the centralizer outside the family would extend it.
    """
    ctx = limit_context(ivi.orbit)
    span = ivi.span()
    rep = Report("maximality in the horizontal part")
    if not span <= ctx.horizontal:
        rep.add("family is horizontal", False)
        return rep
    z = centralizer_in(ctx.horizontal, list(ivi.family), ivi.orbit.ambient)
    rep.add("family equals its centralizer", z == span,
            dim=span.dim, centralizer_dim=z.dim)
    rep.data["dim"] = span.dim
    rep.data["centralizer_dim"] = z.dim
    return rep


def is_maximal_abelian(ivi: IVI) -> bool:
    return verify_maximality(ivi).ok


def collapse_cone(ivi: IVI, coefficients=None) -> IVI:
    """Replace the cone by a single positive combination of its generators."""
    r = ivi.orbit.cone.r
    if r == 0:
        raise ValueError("nothing to collapse: the cone is empty")
    if coefficients is None:
        coefficients = [1] * r
    coeffs = [as_scalar(c) for c in coefficients]
    for c in coeffs:
        if not (c.is_real() and c.re > 0):
            raise ValueError("collapse needs positive real coefficients")
    merged = NilpotentCone((ivi.orbit.cone.element(coeffs),))
    collapsed = IVI(NilpotentOrbit(ivi.orbit.weight, ivi.orbit.form,
                                   ivi.orbit.filtration, merged), ivi.family)
    rep = verify_ivi(collapsed)
    if not rep.ok:
        raise VerificationError(
            "collapsed cone fails verification: " + "; ".join(rep.failed()))
    return collapsed


# ---------------------------------------------------------------------------
# polynomial period maps
# ---------------------------------------------------------------------------

class PolyMap:
    """A matrix-valued polynomial in named variables, stored term by term."""

    __slots__ = ("variables", "terms", "shape")

    def __init__(self, variables: Sequence[str],
                 terms: Mapping[tuple[int, ...], Mat]):
        self.variables = tuple(variables)
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("duplicate variable names")
        clean = {}
        shape = None
        for expo, coeff in terms.items():
            expo = tuple(int(e) for e in expo)
            if len(expo) != len(self.variables) or any(e < 0 for e in expo):
                raise ValueError(f"bad exponent vector {expo}")
            if shape is None:
                shape = coeff.shape
            elif coeff.shape != shape:
                raise ValueError("coefficient matrices of mixed shapes")
            if not coeff.is_zero():
                clean[expo] = coeff
        if shape is None:
            raise ValueError("a polynomial map needs at least one term")
        self.terms = clean
        self.shape = shape

    def is_zero(self) -> bool:
        return not self.terms

    def evaluate(self, point: Mapping[str, object]) -> Mat:
        missing = [v for v in self.variables if v not in point]
        if missing:
            raise ValueError(f"missing values for {missing}")
        vals = [as_scalar(point[v]) for v in self.variables]
        acc = Mat.zeros(*self.shape)
        for expo, coeff in self.terms.items():
            c = GR(1)
            for v, e in zip(vals, expo):
                c = c * v ** e
            acc = acc + coeff * c
        return acc

    def partial(self, var: str) -> "PolyMap":
        if var not in self.variables:
            raise ValueError(f"unknown variable {var!r}")
        i = self.variables.index(var)
        out = {}
        for expo, coeff in self.terms.items():
            if expo[i] == 0:
                continue
            lowered = expo[:i] + (expo[i] - 1,) + expo[i + 1:]
            term = coeff * GR(expo[i])
            out[lowered] = out.get(lowered, Mat.zeros(*self.shape)) + term
        return PolyMap(self.variables, out or
                       {(0,) * len(self.variables): Mat.zeros(*self.shape)})

    def degree_terms(self, d: int) -> dict[tuple[int, ...], Mat]:
        return {e: c for e, c in self.terms.items() if sum(e) == d}

    def __add__(self, other: "PolyMap") -> "PolyMap":
        if self.variables != other.variables:
            raise ValueError("variable mismatch")
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, Mat.zeros(*self.shape)) + c
        return PolyMap(self.variables, out or
                       {(0,) * len(self.variables): Mat.zeros(*self.shape)})

    def __neg__(self) -> "PolyMap":
        return PolyMap(self.variables,
                       {e: -c for e, c in self.terms.items()} or
                       {(0,) * len(self.variables): Mat.zeros(*self.shape)})

    def __sub__(self, other: "PolyMap") -> "PolyMap":
        return self + (-other)

    def __eq__(self, other):
        return (isinstance(other, PolyMap)
                and self.variables == other.variables
                and self.terms == other.terms)

    def __repr__(self):
        return (f"PolyMap({len(self.variables)} variables, "
                f"{len(self.terms)} terms)")


def _ensure_nonempty(variables, terms, shape):
    if terms:
        return terms
    return {(0,) * len(variables): Mat.zeros(*shape)}


def poly_product(a: PolyMap, b: PolyMap) -> PolyMap:
    if a.variables != b.variables:
        raise ValueError("variable mismatch")
    out = {}
    shape = (a.shape[0], b.shape[1])
    for e1, c1 in a.terms.items():
        for e2, c2 in b.terms.items():
            e = tuple(x + y for x, y in zip(e1, e2))
            prod = c1 @ c2
            out[e] = out.get(e, Mat.zeros(*shape)) + prod
    return PolyMap(a.variables, _ensure_nonempty(a.variables, out, shape))


def poly_commutator(a: PolyMap, b: PolyMap) -> PolyMap:
    return poly_product(a, b) - poly_product(b, a)


def integrate_ivi(ivi: IVI) -> PolyMap:
    """The degree-one period map of the family.

    Cone generators get variables z1..zr; a canonical basis of a complement
    of the cone span inside the family gets t1..tm.  The result has
    commuting partial derivatives because the family is abelian.
    """
    orbit = ivi.orbit
    n = orbit.ambient
    span = ivi.span()
    cone_span = orbit.cone.span(n)
    if not cone_span <= span:
        raise ValueError("cone does not lie inside the family")
    rest = cone_span.complement_in(span)
    mats = list(orbit.cone.generators) + span_basis_mats(rest, n)
    names = tuple(f"z{j + 1}" for j in range(orbit.cone.r)) + tuple(
        f"t{j + 1}" for j in range(rest.dim))
    terms = {}
    for i, m in enumerate(mats):
        expo = tuple(1 if j == i else 0 for j in range(len(mats)))
        terms[expo] = m
    if not terms:
        raise ValueError("cannot integrate an empty family")
    return PolyMap(names, terms)


def check_integrability(pm: PolyMap) -> Report:
    """Do all pairs of partial derivatives commute identically?"""
    rep = Report("integrability")
    offending = None
    for i, u in enumerate(pm.variables):
        for v in pm.variables[i + 1:]:
            comm = poly_commutator(pm.partial(u), pm.partial(v))
            if not comm.is_zero():
                expo = sorted(comm.terms)[0]
                offending = (u, v, expo)
                break
        if offending:
            break
    if offending:
        u, v, expo = offending
        rep.add("partial derivatives commute", False,
                pair=f"({u}, {v})", monomial=str(expo))
    else:
        rep.add("partial derivatives commute", True,
                pairs=len(pm.variables) * (len(pm.variables) - 1) // 2)
    return rep


def a_infinity(pm: PolyMap) -> Subspace:
    """Span of the degree-one coefficients — recovers the family."""
    rows, cols = pm.shape
    if rows != cols:
        raise ValueError("period map is not square-matrix valued")
    return operator_span(list(pm.degree_terms(1).values()), rows)
