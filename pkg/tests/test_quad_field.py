from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from cubic_denest.errors import RadicandMismatchError
from cubic_denest.quad_field import QuadExt, qe_add, qe_conj, qe_cube, qe_mul, qe_neg, qe_sub

D1 = F(168259, 6912)
W3 = QuadExt(D1, F(12, 43), F(3, 4))  # (1/12)*sqrt(273) + 3/4, since sqrt(D1) = (43/144)*sqrt(273)


def surd273(s, t):
    # s*sqrt(273) + t expressed over the raw radicand 168259/6912 = (43/144)^2 * 273
    return QuadExt(D1, s / F(43, 144), t)


def test_surd273_encoding():
    assert W3 == surd273(F(1, 12), F(3, 4))
    assert W3.s == F(12, 43)


def test_sub_recovers_root_3_2():
    w4 = surd273(F(1, 12), F(-3, 4))
    diff = qe_sub(W3, w4)
    assert diff == QuadExt(D1, 0, F(3, 2))


def test_add_neg_and_conjugate_sum():
    assert qe_add(W3, qe_neg(W3)) == QuadExt(D1, 0, 0)
    x = QuadExt(5, F(2, 7), F(1, 4))
    assert x + x.conj() == QuadExt(5, 0, F(1, 2))


def test_mul_examples():
    assert qe_mul(QuadExt(5, 1, 1), QuadExt(5, -1, 1)) == QuadExt(5, 0, -4)
    # (3/4 + (1/12)sqrt(273))^2 = 9/16 + 273/144 + 2*(3/4)(1/12) sqrt(273)
    sq = qe_mul(W3, W3)
    assert sq == surd273(F(1, 8), F(59, 24))
    assert qe_mul(W3, QuadExt(D1, 0, 1)) == W3


def test_cube_examples():
    # coefficients: 273/1728 + 9/64 = 43/144 ; 2457/576 + 27/64 = 75/16
    assert F(273, 1728) + F(9, 64) == F(43, 144)
    assert F(2457, 576) + F(27, 64) == F(75, 16)
    assert qe_cube(W3) == surd273(F(43, 144), F(75, 16))
    assert qe_cube(QuadExt(5, F(1, 2), F(1, 2))) == QuadExt(5, 1, 2)
    assert qe_cube(QuadExt(7, 0, F(-2, 3))) == QuadExt(7, 0, F(-8, 27))


def test_conj_examples():
    assert qe_conj(W3) == surd273(F(-1, 12), F(3, 4))
    assert qe_conj(qe_conj(W3)) == W3
    n = qe_mul(W3, qe_conj(W3))
    assert n == QuadExt(D1, 0, W3.t**2 - W3.s**2 * D1)


def test_radicand_mismatch():
    with pytest.raises(RadicandMismatchError):
        QuadExt(2, 1, 0) + QuadExt(3, 1, 0)
    with pytest.raises(RadicandMismatchError):
        qe_mul(QuadExt(2, 1, 0), QuadExt(-3, 1, 0))


def test_scalar_mixing_and_floats():
    x = QuadExt(2, 1, 1)
    assert 2 * x == QuadExt(2, 2, 2)
    assert x - F(1, 2) == QuadExt(2, 1, F(1, 2))
    with pytest.raises(TypeError):
        x + 0.5


def test_perfect_square_radicand_degenerate():
    # sqrt(9/4) = 3/2, so t + s*sqrt(D) is just a rational; the ring must still agree
    x, y = QuadExt(F(9, 4), 2, 1), QuadExt(F(9, 4), -1, 3)
    value = lambda q: q.t + q.s * F(3, 2)
    assert value(x * y) == value(x) * value(y)
    assert value(qe_cube(x)) == value(x) ** 3


rats = st.builds(F, st.integers(-50, 50), st.integers(1, 30))
radicands = rats.filter(lambda q: q != 0)


@st.composite
def same_field(draw, n=2):
    d = draw(radicands)
    return [QuadExt(d, draw(rats), draw(rats)) for _ in range(n)]


@given(same_field(1))
def test_cube_equals_repeated_product(xs):
    (x,) = xs
    assert qe_cube(x) == qe_mul(x, qe_mul(x, x)) == x**3


@given(same_field(2))
def test_norm_multiplicative(xs):
    x, y = xs
    assert (x * y).norm() == x.norm() * y.norm()


@given(same_field(2))
def test_conj_is_ring_homomorphism(xs):
    x, y = xs
    assert (x * y).conj() == x.conj() * y.conj()
    assert (x + y).conj() == x.conj() + y.conj()


@given(same_field(3))
def test_ring_axioms(xs):
    x, y, z = xs
    assert x * (y + z) == x * y + x * z
    assert (x * y) * z == x * (y * z)
    assert x - y == x + (-y)
