import itertools
from fractions import Fraction

import pytest
from conftest import random_fraction, random_poly

from holopade.core.bipoly import BiPoly, divided_difference
from holopade.core.laurent import (INFINITE, AtLeast, LaurentPoly, LaurentTail, ord_inf,
                                   order_at_least, order_to_json)
from holopade.core.linalg import det_exact, det_poly, kernel_basis, kernel_vector, rank
from holopade.core.numbers import gen_binomial, pochhammer, pochhammer_ratio, to_rational
from holopade.core.poly import DEG_ZERO, Poly
from holopade.core.ratfunc import RatFunc
from holopade.errors import PrecisionError


def leibniz(m):
    n = len(m)
    out = Fraction(0)
    for perm in itertools.permutations(range(n)):
        inversions = sum(1 for i, j in itertools.combinations(range(n), 2) if perm[i] > perm[j])
        term = Fraction((-1)**inversions)
        for i in range(n):
            term *= m[i][perm[i]]
        out += term
    return out


#region numbers
def test_pochhammer():
    assert pochhammer(5, 0) == 1
    assert pochhammer(Fraction(1, 2), 3) == Fraction(15, 8)
    assert pochhammer(-2, 4) == 0
    assert pochhammer(1, 5) == 120


def test_gen_binomial():
    assert gen_binomial(5, 2) == 10
    assert gen_binomial(Fraction(1, 2), 2) == Fraction(-1, 8)
    assert gen_binomial(-1, 3) == -1
    assert gen_binomial(7, 0) == 1


def test_pochhammer_ratio():
    assert pochhammer_ratio(Fraction(1, 2), 1, 2) == Fraction(3, 8)
    with pytest.raises(ZeroDivisionError):
        pochhammer_ratio(1, -1, 3)


def test_to_rational():
    assert to_rational('-3/4') == Fraction(-3, 4)
    assert to_rational(7) == 7
    with pytest.raises(TypeError):
        to_rational(True)
    with pytest.raises(TypeError):
        to_rational(0.5)
#endregion


#region polynomials
def test_poly_basics(z):
    p = z**2 - 1
    assert p.degree == 2
    assert Poly.zero().degree == DEG_ZERO
    assert (p * Poly.zero()).is_zero()
    assert p.leading == 1
    assert p(3) == 8
    assert p.derivative() == 2 * z
    assert divmod(p, z - 1) == (z + 1, Poly.zero())
    assert p.gcd(z**2 + 2 * z + 1) == z + 1
    assert (2 * z + 4).monic() == z + 2
    assert p.compose(z + 1) == z**2 + 2 * z
    assert Poly.constant(3) == 3


def test_poly_exact_div(z):
    assert (z**3 - z).exact_div(z) == z**2 - 1
    with pytest.raises(ValueError):
        (z**2 + 1).exact_div(z)


def test_poly_parse():
    assert Poly.parse('-2z') == Poly([0, -2])
    assert Poly.parse('z^2-1') == Poly([-1, 0, 1])
    assert Poly.parse('3*z**2 + 1/2') == Poly([Fraction(1, 2), 0, 3])
    assert Poly.parse('t^2', 't') == Poly([0, 0, 1], 't')
    with pytest.raises(ValueError):
        Poly.parse('sqrt(2)*z')
    with pytest.raises(ValueError):
        Poly.parse('z +')


def test_poly_json(z):
    p = Fraction(1, 2) * z**3 - 4
    assert p.to_json() == ['-4', '0', '0', '1/2']
    assert Poly.from_json(p.to_json()) == p


def test_divided_difference_examples(z):
    assert divided_difference(z**2) == BiPoly({(1, 0): 1, (0, 1): 1})
    assert divided_difference(Poly.constant(7)).is_zero()
    assert divided_difference(3 * z) == BiPoly({(0, 0): 3})


def test_divided_difference_identity(rng):
    z_minus_t = BiPoly({(1, 0): 1, (0, 1): -1})
    for _ in range(40):
        p = random_poly(rng, 12)
        lhs = z_minus_t * divided_difference(p)
        rhs = BiPoly.from_poly(p) - BiPoly.from_poly(p.relabel('t'))
        assert lhs == rhs
        t0 = random_fraction(rng)
        assert divided_difference(p).evaluate_t(t0) * (Poly.x() - t0) == p - p(t0)
#endregion


#region rational functions
def test_ratfunc_normalization(z):
    q = RatFunc(2 * z**2 - 2, 2 * z - 2)
    assert q.is_polynomial()
    assert q.as_poly() == z + 1
    r = RatFunc(z, 2 * z**2)
    assert r.num == Fraction(1, 2)
    assert r.den == z
    assert RatFunc(z**2, z**3) == RatFunc(1, z)
    with pytest.raises(ZeroDivisionError):
        RatFunc(z, Poly.zero())


def test_ratfunc_arithmetic(z):
    a = RatFunc(1, z - 1)
    b = RatFunc(1, z + 1)
    assert a + b == RatFunc(2 * z, z**2 - 1)
    assert a * b == RatFunc(1, z**2 - 1)
    assert a.derivative() == RatFunc(-1, (z - 1)**2)
    assert (a / b) == RatFunc(z + 1, z - 1)


def test_expand_at_infinity(z):
    e = RatFunc(z**2, z - 1).expand_at_infinity(6)
    assert e.poly_part == z + 1
    assert e.tail == LaurentTail([1] * 6, 6)
    exact = RatFunc(z**2 - 1, z - 1).expand_at_infinity(6)
    assert exact.poly_part == z + 1
    assert exact.tail.is_exact() and ord_inf(exact.tail) is INFINITE
#endregion


#region Laurent series
def test_ord_inf_examples(z):
    assert ord_inf(LaurentPoly.from_poly(z**3)) == -3
    assert ord_inf(LaurentTail([0, 0, 5], 4)) == 3
    assert ord_inf(LaurentTail([0, 0], 2)) == AtLeast(3)
    assert ord_inf(LaurentTail.zero()) is INFINITE
    assert order_at_least(AtLeast(3), 3) is True
    assert order_at_least(AtLeast(3), 4) is None
    assert order_at_least(2, 3) is False
    assert order_to_json(INFINITE) == 'inf'
    assert order_to_json(AtLeast(4)) == '>=4'


def test_ord_additive(rng):
    for _ in range(50):
        i, j = (int(x) for x in rng.integers(0, 5, size=2))
        f = LaurentTail.exact([0] * i + [random_fraction(rng) or 1, random_fraction(rng)])
        g = LaurentTail.exact([0] * j + [random_fraction(rng) or 1, random_fraction(rng)])
        assert ord_inf(f * g) == ord_inf(f) + ord_inf(g)


def test_series_times_polynomial(z):
    f = RatFunc(1, z - 1).expand_at_infinity(10)
    out = LaurentPoly.from_poly(z - 1) * f
    assert out.poly_part == 1
    assert out.precision == 9
    assert out.tail == LaurentTail([], 9)
    assert ord_inf(out.tail) == AtLeast(10)


def test_precision_is_tracked():
    f = LaurentTail([1, 2], 2)
    assert f.coeff(1) == 2
    with pytest.raises(PrecisionError):
        f.coeff(2)
    with pytest.raises(PrecisionError):
        f.truncate(3)
    assert LaurentTail.exact([1]).coeff(5) == 0
    assert (f * f).precision == 3
    assert (f + LaurentTail.exact([1, 1, 1])).precision == 2
    assert f.derivative() == LaurentTail([0, -1, -4], 3)
    with pytest.raises(PrecisionError):
        LaurentPoly.from_poly(Poly.monomial(3)) * f
#endregion


#region linear algebra
def test_det_examples():
    assert det_exact([[1, 2], [3, 4]]) == -2
    assert det_exact([[1, 1, 1, 1], [1, 2, 4, 8], [1, 3, 9, 27], [1, 4, 16, 64]]) == 12
    assert det_exact([[0, 1], [1, 0]]) == -1
    assert det_exact([[1, 2], [2, 4]]) == 0
    assert det_exact([]) == 1


def test_det_against_leibniz(rng):
    for _ in range(1000):
        n = int(rng.integers(1, 5))
        m = [[random_fraction(rng, 4) for _ in range(n)] for _ in range(n)]
        assert det_exact(m) == leibniz(m)


def test_det_poly(z):
    m = [[z, 2 * z**2 - 1], [Poly.constant(1), 2 * z]]
    assert det_poly(m) == 1
    assert det_poly([[z, z], [z, z]]).is_zero()


def test_kernel():
    assert kernel_vector([[1, 1]], 2) == [-1, 1]
    basis = kernel_basis([[1, 2, 3]], 3)
    assert len(basis) == 2
    for v in basis:
        assert v[0] + 2 * v[1] + 3 * v[2] == 0
    assert rank([[1, 2], [2, 4]]) == 1
    with pytest.raises(ValueError):
        kernel_vector([[1, 0], [0, 1]], 2)
#endregion
