import random
from fractions import Fraction

import pytest
import sympy

from hodgelim import GR, I, Mat, Subspace
from hodgelim.forms import (BilForm, hermitian_positive_definite,
                            in_isometry_algebra, is_hermitian, q_adjoint,
                            signature)


def to_sympy(m: Mat):
    return sympy.Matrix([[sympy.Rational(e.re) + sympy.Rational(e.im) * sympy.I
                          for e in m.row(i)] for i in range(m.nrows)])


def sturm_signature(m: Mat):
    """Oracle: count positive/negative eigenvalues via Sturm sequences."""
    lam = sympy.Symbol("lam")
    p = sympy.Poly(to_sympy(m).charpoly(lam).as_expr(), lam)
    # strip zero roots
    while p.eval(0) == 0:
        p = sympy.Poly(sympy.cancel(p.as_expr() / lam), lam)
    chain = sympy.sturm(p)

    def variations(x):
        signs = [sympy.sign(q.eval(x) if x is not None else q.LC())
                 for q in chain]
        signs = [s for s in signs if s != 0]
        return sum(1 for a, b in zip(signs, signs[1:]) if a * b < 0)

    neg_inf = [sympy.sign(q.LC() * (-1) ** q.degree()) for q in chain]
    neg_inf = [s for s in neg_inf if s != 0]
    var_neg_inf = sum(1 for a, b in zip(neg_inf, neg_inf[1:]) if a * b < 0)
    var_zero = variations(0)
    var_pos_inf = variations(None)
    return (var_zero - var_pos_inf, var_neg_inf - var_zero)


def random_symmetric(rng, n, span=4):
    entries = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            v = Fraction(rng.randint(-span, span), rng.randint(1, 3))
            entries[i][j] = entries[j][i] = v
    return Mat(entries)


class TestBilForm:
    def test_parity_validation(self):
        BilForm(Mat([[0, 1], [1, 0]]), parity=0)
        BilForm(Mat([[0, 1], [-1, 0]]), parity=1)
        with pytest.raises(ValueError):
            BilForm(Mat([[0, 1], [1, 0]]), parity=1)
        with pytest.raises(ValueError):
            BilForm(Mat([[0, 1], [-1, 0]]), parity=0)

    def test_degenerate_rejected(self):
        with pytest.raises(ValueError):
            BilForm(Mat([[1, 0], [0, 0]]), parity=0)

    def test_evaluation(self):
        q = BilForm(Mat([[0, 1], [-1, 0]]), parity=1)
        assert q([1, 0], [0, 1]) == 1
        assert q([0, 1], [1, 0]) == -1
        assert q([1, 2], [1, 2]) == 0
        # antisymmetry on random vectors
        rng = random.Random("bilform")
        for _ in range(10):
            u = [rng.randint(-5, 5) for _ in range(2)]
            v = [rng.randint(-5, 5) for _ in range(2)]
            assert q(u, v) == -q(v, u)

    def test_gram_and_orthogonal(self):
        q = BilForm(Mat([[1, 0], [0, -1]]), parity=0)
        s1 = Subspace.span([[1, 0]], 2)
        s2 = Subspace.span([[0, 1]], 2)
        assert q.gram(s1, s2).is_zero()
        assert q.orthogonal(s1, s2)
        assert q.restrict(s2) == Mat([[-1]])


def test_q_adjoint_defining_identity():
    rng = random.Random("adjoint")
    q1 = BilForm(Mat([[2, 1], [1, 1]]), parity=0)
    q2 = BilForm(Mat([[0, 1], [-1, 0]]), parity=1)
    for _ in range(10):
        t = Mat([[rng.randint(-3, 3) for _ in range(2)] for _ in range(2)])
        a = q_adjoint(t, q1, q2)
        for _ in range(5):
            u = [rng.randint(-4, 4) for _ in range(2)]
            v = [rng.randint(-4, 4) for _ in range(2)]
            assert q2(t.mv(u), v) == q1(u, a.mv(v))


def test_isometry_algebra_membership():
    # so(2): antisymmetric matrices preserve the standard symmetric form
    q = BilForm(Mat.identity(2), parity=0)
    assert in_isometry_algebra(Mat([[0, 1], [-1, 0]]), q)
    assert not in_isometry_algebra(Mat([[1, 0], [0, 0]]), q)
    # sp(2) = sl(2) for the standard symplectic form
    w = BilForm(Mat([[0, 1], [-1, 0]]), parity=1)
    assert in_isometry_algebra(Mat([[1, 0], [0, -1]]), w)
    assert in_isometry_algebra(Mat([[0, 1], [0, 0]]), w)
    assert not in_isometry_algebra(Mat([[1, 0], [0, 1]]), w)


class TestSignature:
    def test_known(self):
        assert signature(Mat([[1, 0], [0, -1]])) == (1, 1)
        assert signature(Mat([[2]])) == (1, 0)
        assert signature(Mat([[0, 1], [1, 0]])) == (1, 1)
        assert signature(Mat.zeros(2, 2)) == (0, 0)
        assert signature(Mat([[0, 0, 1], [0, -1, 0], [1, 0, 0]])) == (1, 2)

    def test_input_validation(self):
        with pytest.raises(ValueError):
            signature(Mat([[0, 1], [-1, 0]]))
        with pytest.raises(ValueError):
            signature(Mat([[GR(0, 1)]]))

    def test_congruence_invariance(self):
        rng = random.Random("congruence")
        for _ in range(15):
            n = rng.randint(1, 5)
            a = random_symmetric(rng, n)
            g = Mat([[rng.randint(-3, 3) for _ in range(n)]
                     for _ in range(n)])
            if g.rank() < n:
                continue
            assert signature(g.transpose() @ a @ g) == signature(a)

    def test_against_sturm_oracle(self):
        rng = random.Random("sturm")
        for _ in range(12):
            n = rng.randint(1, 4)
            a = random_symmetric(rng, n)
            assert signature(a) == sturm_signature(a)


class TestHermitianPositive:
    def test_known(self):
        assert hermitian_positive_definite(Mat.identity(3))
        assert not hermitian_positive_definite(Mat([[1, 0], [0, -1]]))
        assert not hermitian_positive_definite(Mat([[0, 0], [0, 1]]))
        m = Mat([[2, I], [-I, 2]])
        assert is_hermitian(m)
        assert hermitian_positive_definite(m)
        assert not hermitian_positive_definite(Mat([[1, GR(0, 3)],
                                                    [GR(0, -3), 2]]))

    def test_non_hermitian_rejected(self):
        assert not hermitian_positive_definite(Mat([[1, 1], [0, 1]]))
        assert not hermitian_positive_definite(Mat([[I]]))

    def test_against_sympy_oracle(self):
        rng = random.Random("posdef")
        for _ in range(15):
            n = rng.randint(1, 4)
            b = Mat([[GR(rng.randint(-3, 3), rng.randint(-3, 3))
                      for _ in range(n)] for _ in range(n)])
            g = b.conj_transpose() @ b  # PSD, maybe singular
            shift = rng.choice([-2, -1, 0, 1])
            g = g + shift * Mat.identity(n)
            expected = bool(to_sympy(g).is_positive_definite)
            assert hermitian_positive_definite(g) == expected
