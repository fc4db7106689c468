"""Mixed Hodge structures: splittings, graded checks, limit polarizations.

Two independent routes are kept deliberately separate.  The canonical
bigrading is produced by a closed formula and checked against structural
postconditions; the graded-quotient route re-verifies the same data through
pure Hodge structures on each W-graded piece.  ``verify_mhs`` runs both.
"""
from __future__ import annotations

from .endo import solve_in_span
from .errors import VerificationError
from .forms import (BilForm, hermitian_positive_definite, in_isometry_algebra,
                    is_hermitian)
from .filtrations import (Bigrading, DecFiltration, IncFiltration,
                          hs_from_filtration, shift_filtration,
                          weight_filtration, weil_operator)
from .matrices import Mat, t_kernel, t_matvec
from .reports import Report
from .scalars import GR, t_conj
from .subspaces import Quotient, Subspace


def deligne_bigrading(w: IncFiltration, f: DecFiltration) -> Bigrading:
    """The canonical bigrading I^{p,q} of a mixed Hodge structure (W, F).

    I^{p,q} = F^p ∩ W_{p+q} ∩ (conj(F^q) ∩ W_{p+q}
                                + sum_{i>=1} conj(F^{q-i}) ∩ W_{p+q-i-1}).

    Postconditions checked on every call: the pieces are independent and
    span, they rebuild W and F by partial sums, and I^{p,q} is conjugate
    to I^{q,p} modulo the lower-index pieces.  A failure of any of these
    raises VerificationError — which is exactly what happens when (W, F)
    is not a mixed Hodge structure.
    """
    if w.ambient != f.ambient:
        raise ValueError("filtration ambient mismatch")
    fbar = f.conj()
    fmin, fmax = f.keys[0], f.keys[-1]
    wmin = w.keys[0]
    pieces = {}
    for p in range(fmin, fmax + 1):
        for q in range(fmin, fmax + 1):
            l = p + q
            wl = w.at(l)
            if wl.is_zero():
                continue
            right = fbar.at(q) & wl
            i = 1
            while l - i - 1 >= wmin:
                right = right + (fbar.at(q - i) & w.at(l - i - 1))
                i += 1
            piece = (f.at(p) & wl) & right
            if not piece.is_zero():
                pieces[(p, q)] = piece
    if not pieces:
        raise VerificationError("no bigrading pieces found")

    try:
        bigr = Bigrading(pieces)
    except VerificationError:
        raise VerificationError(
            "(W, F) is not a mixed Hodge structure: canonical pieces do "
            "not decompose the space") from None
    if bigr.weight_sums() != w:
        raise VerificationError("canonical pieces do not rebuild W")
    if bigr.first_index_sums() != f:
        raise VerificationError("canonical pieces do not rebuild F")
    # conjugation symmetry modulo lower-order pieces, both inclusions
    for (p, q), s in bigr.pieces.items():
        lower = Subspace.zero(bigr.ambient)
        for (a, b), t in bigr.pieces.items():
            if a < p and b < q:
                lower = lower + t
        mirror = bigr.piece(q, p).conj()
        if not (s <= mirror + lower and mirror <= s + lower):
            raise VerificationError(
                f"piece ({p},{q}) not conjugate to ({q},{p}) modulo "
                "lower-index pieces")
    return bigr


def graded_piece(w: IncFiltration, l: int) -> Quotient:
    return Quotient(w.at(l - 1), w.at(l))


def graded_filtration(w: IncFiltration, f: DecFiltration, l: int,
                      quot: Quotient | None = None) -> DecFiltration:
    """The filtration induced by F on gr^W_l, in quotient coordinates."""
    q = quot or graded_piece(w, l)
    steps = {}
    for p in range(f.keys[0], f.keys[-1] + 1):
        inter = f.at(p) & w.at(l)
        vecs = [q.project_coords(v) for v in inter.rows]
        steps[p] = Subspace.span(vecs, q.dim)
    return DecFiltration(steps)


def verify_mhs(w: IncFiltration, f: DecFiltration) -> Report:
    """Check that (W, F) is a mixed Hodge structure over R.

    Route one: the canonical bigrading exists with all its postconditions.
    Route two: F induces a pure Hodge structure of weight l on every
    graded piece gr^W_l.  Both run; their Hodge numbers must agree.
    """
    rep = Report("mixed Hodge structure")
    if w.ambient != f.ambient:
        rep.add("filtrations live on the same space", False)
        return rep
    real = rep.add("W is defined over R", w.is_conj_stable())

    bigr = None
    try:
        bigr = deligne_bigrading(w, f)
        rep.add("canonical bigrading", True, dims=bigr.dims())
        rep.data["bigrading_dims"] = {f"{p},{q}": d
                                      for (p, q), d in bigr.dims().items()}
    except VerificationError as e:
        rep.add("canonical bigrading", False, reason=str(e))

    if not real:
        rep.add("graded pieces are pure Hodge structures", False,
                reason="W not conjugation-stable")
        return rep

    graded_ok = True
    graded_dims = {}
    reason = None
    for l in range(w.keys[0], w.keys[-1] + 1):
        quot = graded_piece(w, l)
        if quot.dim == 0:
            continue
        try:
            fl = graded_filtration(w, f, l, quot)
            hs = hs_from_filtration(fl, l)
        except VerificationError as e:
            graded_ok = False
            reason = f"gr_{l}: {e}"
            break
        for (p, q), d in hs.hodge_numbers().items():
            graded_dims[(p, q)] = d
    if reason:
        rep.add("graded pieces are pure Hodge structures", False,
                reason=reason)
    else:
        rep.add("graded pieces are pure Hodge structures", graded_ok,
                dims=graded_dims)
    if bigr is not None and graded_ok:
        rep.add("graded Hodge numbers match the bigrading",
                graded_dims == bigr.dims())
    return rep


# ---------------------------------------------------------------------------
# induced structure on operator algebras
# ---------------------------------------------------------------------------

def lie_bigrading(vb: Bigrading, algebra: Subspace) -> Bigrading:
    """Bigrading induced on a subalgebra of End(V) by a bigrading of V.

    Piece (a, b) is {X in algebra : X I^{p,q} ⊆ I^{p+a, q+b} for all p, q}.
    Raises VerificationError when the pieces fail to decompose the algebra
    (then the algebra is not compatible with the bigrading).
    """
    n = vb.ambient
    if algebra.ambient != n * n:
        raise ValueError("algebra is not a space of operators on V")
    if algebra.is_zero():
        raise ValueError("cannot bigrade the zero algebra")
    support = vb.support()
    ps = [p for p, _ in support]
    qs = [q for _, q in support]
    pieces = {}
    for a in range(min(ps) - max(ps), max(ps) - min(ps) + 1):
        for b in range(min(qs) - max(qs), max(qs) - min(qs) + 1):
            def conditions(x: Mat, a=a, b=b):
                out = []
                for (p, q), s in vb.pieces.items():
                    dst = vb.piece(p + a, q + b)
                    for v in s.rows:
                        out.append(Mat.from_triples(
                            (dst.reduce(t_matvec(x.t, v)),), n))
                return out
            piece = solve_in_span(algebra, n, conditions)
            if not piece.is_zero():
                pieces[(a, b)] = piece
    if not pieces:
        raise VerificationError(
            "operator algebra has no pure-degree elements")
    try:
        return Bigrading(pieces, total=algebra)
    except VerificationError:
        raise VerificationError(
            "operator algebra is not compatible with the bigrading") from None


def p_part(lb: Bigrading, a: int) -> Subspace:
    """Sum of the operator bigrading pieces with first index a."""
    return lb.row(a)


def g_minus(lb: Bigrading) -> Subspace:
    """Sum of the operator bigrading pieces with negative first index."""
    acc = Subspace.zero(lb.ambient)
    for (a, _), s in lb.pieces.items():
        if a < 0:
            acc = acc + s
    return acc


def filtration_lowering(vb: Bigrading, algebra: Subspace,
                        degree: int = -1) -> Subspace:
    """Single-kernel computation of the degree-``degree`` horizontal part.

    Equals the sum over b of the (degree, b) pieces of
    :func:`lie_bigrading` — the conditions X I^{p,q} ⊆ ⊕_q' I^{p+degree,q'}
    kill every component with a different first index — but costs one
    linear solve instead of a full bigrading.  The equality is exercised
    in the test suite.
    """
    n = vb.ambient
    rows = {}
    for p, q in vb.support():
        rows.setdefault(p, Subspace.zero(n))
        rows[p] = rows[p] + vb.pieces[(p, q)]

    def conditions(x: Mat):
        out = []
        for (p, q), s in vb.pieces.items():
            dst = rows.get(p + degree, Subspace.zero(n))
            for v in s.rows:
                out.append(Mat.from_triples((dst.reduce(t_matvec(x.t, v)),), n))
        return out

    return solve_in_span(algebra, n, conditions)


# ---------------------------------------------------------------------------
# polarized limit structures
# ---------------------------------------------------------------------------

def verify_pmhs(weight: int, q: BilForm, w: IncFiltration, f: DecFiltration,
                n: Mat) -> Report:
    """Check that (W, F, N) is a polarized limit structure of pure origin.

    W must be the weight filtration of N recentered at ``weight``; (W, F)
    must be a mixed Hodge structure; and on the primitive part of each
    graded piece gr_{weight+l} the form Q(C u, N^l conj v) must be positive
    definite Hermitian.
    """
    rep = Report(f"polarized limit structure (weight {weight})")
    dim = q.dim
    rep.add("N is real", n.is_real())
    nilp = n.is_square() and n.nrows == dim and n.pow(weight + 1).is_zero()
    rep.add(f"N^{weight + 1} = 0", nilp)
    rep.add("N preserves the form infinitesimally", in_isometry_algebra(n, q))

    lowers = all(f.at(p).map_by(n) <= f.at(p - 1)
                 for p in range(f.keys[0], f.keys[-1] + 1))
    rep.add("N lowers F by one", lowers)

    if not nilp:
        return rep
    wn = shift_filtration(weight_filtration(n), -weight)
    rep.add("W is the recentered weight filtration of N", wn == w)

    rep.add("form parity matches weight", q.parity == weight % 2)
    rep.add("form is real", q.is_real())
    ortho = True
    for a in range(weight + 1 - f.keys[-1], f.keys[-1] + 1):
        fa, fb = f.at(a), f.at(weight - a + 1)
        if not fa.is_zero() and not fb.is_zero() and not q.orthogonal(fa, fb):
            ortho = False
            break
    rep.add("F^a orthogonal to F^(k-a+1)", ortho)

    mhs = verify_mhs(w, f)
    rep.extend(mhs, prefix="mhs: ")
    if not rep.ok:
        return rep

    # primitive positivity level by level
    prim_dims = {}
    ok = True
    reason = None
    for l in range(0, w.keys[-1] - weight + 1):
        top = graded_piece(w, weight + l)
        if top.dim == 0:
            continue
        bottom = graded_piece(w, weight - l - 2)
        npl1 = n.pow(l + 1)
        if not w.at(weight + l).map_by(npl1) <= w.at(weight - l - 2):
            ok, reason = False, f"N^{l + 1} does not shift W by 2l+2 at level {l}"
            break
        induced = top.induced_matrix(npl1, bottom)
        prim = Subspace.span(t_kernel(induced.t, induced.ncols), top.dim)
        prim_dims[weight + l] = prim.dim
        if prim.is_zero():
            continue
        try:
            fl = graded_filtration(w, f, weight + l, top)
            hs = hs_from_filtration(fl, weight + l)
        except VerificationError as e:
            ok, reason = False, f"gr_{weight + l}: {e}"
            break
        weil = weil_operator(hs)
        npl = n.pow(l)
        gram_rows = []
        lifts = [top.lift(v) for v in prim.rows]
        weil_lifts = [top.lift(weil.mv(v)) for v in prim.rows]
        for u in weil_lifts:
            gu = [GR.from_triple(e) for e in u]
            row = []
            for x in lifts:
                nx = t_matvec(npl.t, tuple(t_conj(e) for e in x))
                row.append(q(gu, [GR.from_triple(e) for e in nx]))
            gram_rows.append(row)
        gram = Mat(gram_rows)
        if not is_hermitian(gram):
            ok, reason = False, f"primitive form at level {l} not Hermitian"
            break
        if not hermitian_positive_definite(gram):
            ok, reason = False, f"primitive form at level {l} not positive"
            break
    if reason:
        rep.add("primitive pieces are positive", False, reason=reason)
    else:
        rep.add("primitive pieces are positive", ok, dims=prim_dims)
    rep.data["primitive_dims"] = {str(k): v for k, v in prim_dims.items()}
    return rep
