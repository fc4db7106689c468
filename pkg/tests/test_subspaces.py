import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from hodgelim import GR, I, Mat, Subspace, Quotient, image, kernel


def random_subspace(rng, n, max_vecs=None):
    k = rng.randint(0, max_vecs if max_vecs is not None else n)
    vecs = [[rng.randint(-5, 5) + rng.randint(-2, 2) * GR(0, 1)
             for _ in range(n)] for _ in range(k)]
    return Subspace.span(vecs, n)


def test_canonical_equality():
    a = Subspace.span([[1, 1, 0], [0, 1, 1]], 3)
    b = Subspace.span([[1, 2, 1], [2, 3, 1], [1, 0, -1]], 3)
    assert a == b
    assert hash(a) == hash(b)
    assert a.dim == 2


def test_zero_and_full():
    z = Subspace.zero(3)
    f = Subspace.full(3)
    assert z.dim == 0 and f.dim == 3
    assert z <= f
    assert (z + f) == f
    assert (z & f) == z
    assert Subspace.span([], 3) == z
    assert Subspace.span([[0, 0, 0]], 3) == z


def test_membership_and_coords():
    s = Subspace.span([[1, 0, 2], [0, 1, 3]], 3)
    assert s.contains([2, 1, 7])
    assert not s.contains([0, 0, 1])
    assert s.coords([2, 1, 7]) == (GR(2), GR(1))
    with pytest.raises(ValueError):
        s.coords([0, 0, 1])


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32))
def test_dimension_formula(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 6)
    a = random_subspace(rng, n)
    b = random_subspace(rng, n)
    assert (a + b).dim + (a & b).dim == a.dim + b.dim
    assert (a & b) <= a and (a & b) <= b
    assert a <= (a + b) and b <= (a + b)


def test_intersection_example():
    a = Subspace.span([[1, 0, 0], [0, 1, 0]], 3)
    b = Subspace.span([[0, 1, 0], [0, 0, 1]], 3)
    assert (a & b) == Subspace.span([[0, 1, 0]], 3)


def test_complement():
    rng = random.Random("complement")
    for _ in range(20):
        n = rng.randint(1, 6)
        sup = random_subspace(rng, n)
        # pick a random subspace of sup
        k = rng.randint(0, sup.dim)
        basis = sup.basis_vectors()
        sub_vecs = []
        for _ in range(k):
            coeffs = [GR(rng.randint(-3, 3)) for _ in basis]
            sub_vecs.append([sum((c * v[i] for c, v in zip(coeffs, basis)),
                             GR(0)) for i in range(n)])
        sub = Subspace.span(sub_vecs, n)
        comp = sub.complement_in(sup)
        assert comp.dim == sup.dim - sub.dim
        assert (comp + sub) == sup
        assert (comp & sub).dim == 0


def test_complement_requires_inclusion():
    a = Subspace.span([[1, 0]], 2)
    b = Subspace.span([[0, 1]], 2)
    with pytest.raises(ValueError):
        a.complement_in(b)


def test_conj_stable_spaces_have_real_bases():
    # the canonical basis of a conjugation-stable subspace is real
    rng = random.Random("conj-stable")
    for _ in range(20):
        n = rng.randint(1, 6)
        vecs = []
        for _ in range(rng.randint(0, n)):
            v = [GR(rng.randint(-4, 4), rng.randint(-4, 4)) for _ in range(n)]
            vecs.append(v)
            vecs.append([x.conj() for x in v])
        s = Subspace.span(vecs, n)
        assert s.is_conj_stable()
        assert s.has_real_basis()
        assert s.conj() == s


def test_not_conj_stable():
    s = Subspace.span([[1, I]], 2)
    assert not s.is_conj_stable()
    assert s.conj() == Subspace.span([[1, -I]], 2)


def test_map_by_and_image_kernel():
    m = Mat([[1, 0, 1], [0, 1, 1]])
    s = Subspace.full(3)
    assert s.map_by(m) == Subspace.full(2)
    assert image(m) == Subspace.full(2)
    k = kernel(m)
    assert k.dim == 1
    assert k.contains([1, 1, -1])


def test_basis_matrix_roundtrip():
    s = Subspace.span([[1, 2, 3], [0, 1, 1]], 3)
    b = s.basis_matrix()
    assert b.shape == (3, 2)
    assert Subspace.span([b.col(0), b.col(1)], 3) == s


def test_quotient_projection():
    sup = Subspace.full(3)
    sub = Subspace.span([[1, 1, 1]], 3)
    q = Quotient(sub, sup)
    assert q.dim == 2
    # lift then project is the identity on quotient coordinates
    rng = random.Random("quot")
    for _ in range(10):
        coords = [rng.randint(-4, 4) for _ in range(q.dim)]
        v = q.lift(coords)
        assert q.project_coords(v) == tuple(GR(c).triple for c in coords)
    # vectors differing by sub project equally
    assert q.project_coords([2, 1, 0]) == q.project_coords([3, 2, 1])


def test_quotient_induced_matrix():
    # N shifts e0 -> e1 -> e2 -> 0; induced on C^3/span(e2) in basis (e0, e1)
    n = Mat([[0, 0, 0], [1, 0, 0], [0, 1, 0]])
    sub = Subspace.span([[0, 0, 1]], 3)
    q = Quotient(sub, Subspace.full(3))
    ind = q.induced_matrix(n)
    # complement basis is (e0, e1) canonical; N e0 = e1, N e1 = 0 mod sub
    assert ind == Mat([[0, 0], [1, 0]])


def test_quotient_of_zero_sub():
    q = Quotient(Subspace.zero(2), Subspace.full(2))
    assert q.dim == 2
    assert q.project_coords([3, 4]) == (GR(3).triple, GR(4).triple)
