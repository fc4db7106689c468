import random

import pytest

from hodgelim.errors import VerificationError
from hodgelim.filtrations import (Bigrading, DecFiltration, IncFiltration,
                                  hs_from_filtration, operator_filtration,
                                  shift_filtration, verify_phs,
                                  weight_filtration, weil_operator)
from hodgelim.endo import isometry_algebra
from hodgelim.forms import BilForm
from hodgelim.matrices import Mat
from hodgelim.scalars import GR, I
from hodgelim.subspaces import Subspace


def jordan_nilpotent(sizes):
    """Block-diagonal nilpotent with lower-shift blocks of the given sizes."""
    n = sum(sizes)
    rows = [[0] * n for _ in range(n)]
    off = 0
    for s in sizes:
        for c in range(s - 1):
            rows[off + c + 1][off + c] = 1
        off += s
    return Mat(rows)


def jordan_weight_dim(sizes, l):
    """Independent count of dim W_l for a direct sum of shift blocks.

    A single block of size s contributes min(max((s + l + 1) // 2, 0), s);
    blocks are independent, so contributions add.
    """
    total = 0
    for s in sizes:
        total += min(max((s + l + 1) // 2, 0), s)
    return total


def random_invertible(n, rng):
    while True:
        m = Mat([[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)])
        try:
            m.inverse()
            return m
        except ZeroDivisionError:
            continue


# ---------------------------------------------------------------------------
# filtration semantics
# ---------------------------------------------------------------------------

def test_decreasing_filtration_interpolates():
    f = DecFiltration({0: Subspace.full(2), 2: Subspace.span([(1, 0)], 2)})
    assert f.at(-5).dim == 2
    assert f.at(0).dim == 2
    assert f.at(1).dim == 1   # smallest listed index >= 1 is 2
    assert f.at(2).dim == 1
    assert f.at(3).dim == 0


def test_increasing_filtration_interpolates():
    w = IncFiltration({0: Subspace.span([(0, 1)], 2), 2: Subspace.full(2)})
    assert w.at(-1).dim == 0
    assert w.at(0).dim == 1
    assert w.at(1).dim == 1   # largest listed index <= 1 is 0
    assert w.at(2).dim == 2
    assert w.at(7).dim == 2


def test_filtration_equality_ignores_redundant_steps():
    a = DecFiltration({0: Subspace.full(2), 1: Subspace.span([(1, 0)], 2)})
    b = DecFiltration({0: Subspace.full(2), 1: Subspace.span([(1, 0)], 2),
                       -3: Subspace.full(2)})
    assert a == b


def test_filtration_rejects_non_nested_steps():
    with pytest.raises(ValueError):
        DecFiltration({0: Subspace.span([(1, 0)], 2),
                       1: Subspace.span([(0, 1)], 2)})
    with pytest.raises(ValueError):
        IncFiltration({0: Subspace.full(2), 1: Subspace.span([(1, 0)], 2)})


def test_shift_relabels_indices():
    w = IncFiltration({-1: Subspace.span([(0, 1)], 2), 1: Subspace.full(2)})
    s = shift_filtration(w, -1)
    assert [s.at(j).dim for j in (0, 1, 2)] == [1, 1, 2]
    for j in range(-3, 4):
        assert s.at(j) == w.at(j - 1)


# ---------------------------------------------------------------------------
# weight filtrations of nilpotent operators
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("sizes", [(2,), (3,), (2, 3), (1, 4), (1, 1, 2),
                                   (4,), (3, 3)])
def test_weight_filtration_matches_block_count(sizes):
    n = jordan_nilpotent(sizes)
    w = weight_filtration(n)
    k0 = max(sizes) - 1
    for l in range(-k0 - 1, k0 + 2):
        assert w.at(l).dim == jordan_weight_dim(sizes, l), (sizes, l)


def test_weight_filtration_equivariant_under_conjugation():
    rng = random.Random("weight-equivariance")
    for trial in range(8):
        sizes = rng.choice([(2, 3), (3,), (1, 2, 2), (4, 1)])
        n = jordan_nilpotent(sizes)
        g = random_invertible(sum(sizes), rng)
        moved = weight_filtration(g @ n @ g.inverse())
        base = weight_filtration(n)
        for l in base.support():
            assert moved.at(l) == base.at(l).map_by(g)


def test_weight_filtration_steps_by_two():
    n = jordan_nilpotent((3, 2))
    w = weight_filtration(n)
    for l in range(-3, 4):
        assert w.at(l).map_by(n) <= w.at(l - 2)


def test_weight_filtration_rejects_non_nilpotent():
    with pytest.raises(ValueError):
        weight_filtration(Mat([[1, 0], [0, 0]]))


def test_zero_operator_weight_filtration_is_a_single_jump():
    w = weight_filtration(Mat.zeros(3, 3))
    assert w.at(-1).dim == 0 and w.at(0).dim == 3


# ---------------------------------------------------------------------------
# pure Hodge structures
# ---------------------------------------------------------------------------

def weight_one_example():
    f = DecFiltration({0: Subspace.full(2),
                       1: Subspace.span([(-I, GR(1))], 2)})
    q = BilForm(Mat([[0, 1], [-1, 0]]), parity=1)
    return f, q


def test_weight_one_example_is_polarized():
    f, q = weight_one_example()
    rep = verify_phs(f, 1, q)
    assert rep.ok, rep.pretty()


def test_weight_one_positivity_value():
    # h(v, v) = Q(Cv, conj v) with v spanning the (1,0) part
    f, q = weight_one_example()
    hs = hs_from_filtration(f, 1)
    c = weil_operator(hs)
    v = (-I, GR(1))
    assert q(c.mv(v), [x.conj() for x in v]) == GR(2)


def test_sign_flip_breaks_positivity():
    f, _ = weight_one_example()
    q = BilForm(Mat([[0, -1], [1, 0]]), parity=1)
    rep = verify_phs(f, 1, q)
    assert not rep.ok


def test_wrong_weight_fails():
    f, q = weight_one_example()
    assert not verify_phs(f, 2, q).ok


def test_non_hodge_filtration_rejected():
    # F^1 spanned by a real vector: F^1 + conj(F^1) cannot fill the plane
    f = DecFiltration({0: Subspace.full(2), 1: Subspace.span([(1, 0)], 2)})
    with pytest.raises(VerificationError):
        hs_from_filtration(f, 1)


def test_weil_operator_squares_to_parity():
    f, _ = weight_one_example()
    hs = hs_from_filtration(f, 1)
    c = weil_operator(hs)
    assert c @ c == Mat([[-1, 0], [0, -1]])
    assert c.is_real()  # i^{p-q} is real iff p-q even; here C swaps factors


def test_bigrading_requires_independent_pieces():
    s = Subspace.span([(1, 0)], 2)
    with pytest.raises(VerificationError):
        Bigrading({(0, 0): s, (1, 1): s})
    with pytest.raises(VerificationError):
        Bigrading({(0, 0): s})  # does not span


# ---------------------------------------------------------------------------
# induced filtration on operator algebras
# ---------------------------------------------------------------------------

def test_operator_filtration_on_symplectic_algebra():
    f, q = weight_one_example()
    g = isometry_algebra(q)
    of = operator_filtration(f, g)
    dims = [(a, of.at(a).dim) for a in range(-2, 3)]
    assert dims == [(-2, 3), (-1, 3), (0, 2), (1, 1), (2, 0)]


def test_operator_filtration_is_multiplicative_on_examples():
    f, q = weight_one_example()
    g = isometry_algebra(q)
    of = operator_filtration(f, g)
    # an operator of level a moves F^p into F^{p+a}
    for a in of.support():
        for row in of.at(a).rows:
            x = Mat.from_triples(tuple(row[i:i + 2] for i in (0, 2)), 2)
            for p in (0, 1):
                assert f.at(p).map_by(x) <= f.at(p + a)
