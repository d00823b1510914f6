from fractions import Fraction

import pytest
from conftest import random_operator, random_poly

from holopade.core.poly import Poly
from holopade.core.ratfunc import RatFunc
from holopade.errors import HypothesisError
from holopade.weyl.diffop import DiffOp, adjoint, apply, commutator, compose
from holopade.weyl.kernel import cauchy_identity_residual, cauchy_kernel_polynomial
from holopade.weyl.rodrigues import (FirstOrderData, commutation_coefficients,
                                     commutation_expansion, commute_criterion, commutes_directly,
                                     decompose_product, euler_operator, in_ideal, rodrigues_apply,
                                     rodrigues_op, satisfying_factorizations, scaled_euler_power)


#region operator algebra
def test_compose_examples(z):
    d = DiffOp.d()
    assert compose(d, DiffOp.multiplication(z)) == DiffOp((1, z))
    assert commutator(d, DiffOp.multiplication(z)) == DiffOp.identity()
    assert (d**2)(z**3) == 6 * z
    assert compose(DiffOp.multiplication(z), d) == DiffOp((0, z))


def test_apply_examples(z):
    D = DiffOp.first_order(z**2 - 1, -z)
    assert apply(D, z) == -2 * z**2 + 1
    assert apply(DiffOp.multiplication(RatFunc(1, z)), z**2) == z
    assert apply(DiffOp.d(), RatFunc(1, z)) == RatFunc(-1, z**2)
    assert apply(DiffOp.zero(), z**5).is_zero()


def test_adjoint_examples(z):
    t = Poly.x('t')
    assert adjoint(DiffOp.d()) == DiffOp((0, -1), 't')
    assert adjoint(DiffOp.multiplication(z)) == DiffOp.multiplication(t, 't')
    assert adjoint(DiffOp((0, z))) == DiffOp((-1, -t), 't')
    with pytest.raises(ValueError):
        adjoint(DiffOp.multiplication(RatFunc(1, z)))


def test_adjoint_involution(rng):
    for _ in range(300):
        D = random_operator(rng, max_order=3)
        assert adjoint(adjoint(D)) == D


def test_adjoint_reverses_products(rng):
    for _ in range(300):
        D, E = random_operator(rng), random_operator(rng)
        assert adjoint(compose(D, E)) == compose(adjoint(E), adjoint(D))


def test_compose_associative(rng):
    for _ in range(100):
        A, B, C = (random_operator(rng) for _ in range(3))
        assert compose(compose(A, B), C) == compose(A, compose(B, C))
#endregion


#region Rodrigues operators
def test_rodrigues_examples(z):
    F = FirstOrderData.from_polys(z**2 - 1, -z)
    assert F.w == 0
    assert rodrigues_op(F, 1) == DiffOp((z, z**2 - 1))
    assert rodrigues_apply(F, 1, None, Poly.constant(1)) == z
    assert rodrigues_op(F, 0) == DiffOp.identity()


def test_rodrigues_apply_matches_operator(rng, z):
    cheb = FirstOrderData((Poly.constant(1), z**2 - 1), -z)
    lerch = FirstOrderData((z, z - 1), 3 * z**2 - 1)
    for F, r, gen in ((cheb, (0, 1), z**2 - 1), (lerch, (1, 2), z * (z - 1)**2)):
        for n in (1, 2, 3):
            G = gen * random_poly(rng, 3)
            assert apply(rodrigues_op(F, n, r), G) == rodrigues_apply(F, n, r, G)


def test_rodrigues_apply_outside_ideal(z):
    F = FirstOrderData((z, z - 1), z)
    with pytest.raises(HypothesisError):
        rodrigues_apply(F, 1, (1, 0), z + 1)
    with pytest.raises(ValueError):
        rodrigues_apply(F, 1, (1, ), z)


def test_ideal_stability(rng, z):
    F = FirstOrderData.from_polys(z**2 - 1, -z + Fraction(1, 3))
    for gen in (z - 1, (z - 1)**2, (z + 1)**3):
        for n in (1, 2, 3):
            G = random_poly(rng, 3)
            assert in_ideal(rodrigues_apply(F, n, None, gen * G), gen)


def test_degenerate_rodrigues(z):
    # D = -z^2 d - 2z kills the constant of R_1 . 1
    F = FirstOrderData.from_polys(z**2, -2 * z)
    assert rodrigues_apply(F, 1, None, Poly.constant(1)).is_zero()


def test_euler_operator(z):
    E = euler_operator(z, 2 * z**2)
    assert E == DiffOp((2 * z, 1))
#endregion


#region commutativity
def test_decompose_product(z):
    a, b = z**2 - 1, -z
    for c in (z + 1, z**2 - 1, Poly.constant(1)):
        for n in (1, 2, 3):
            assert decompose_product(a, b, c, n) == scaled_euler_power(a, b, c, n)


def test_hermite_operators_commute(z):
    one = Poly.constant(1)
    F1 = FirstOrderData.from_polys(one, z)
    F2 = FirstOrderData.from_polys(one, z + Fraction(1, 2))
    assert commute_criterion(one, F1.b, F2.b, one)
    for n1 in (1, 2):
        for n2 in (1, 2):
            assert commutes_directly(rodrigues_op(F1, n1), rodrigues_op(F2, n2))


def test_bessel_operators_commute(z):
    a = z**2
    b1, b2 = -Poly.constant(1), Fraction(1, 2) * z - 1
    assert commute_criterion(a, b1, b2, z)
    assert not commute_criterion(a, b1, b2, Poly.constant(1))
    assert satisfying_factorizations(a, b1, b2) == [(z, z)]
    for n1 in (1, 2):
        for n2 in (1, 2):
            R1 = scaled_euler_power(a, b1, z, n1)
            R2 = scaled_euler_power(a, b2, z, n2)
            assert commutes_directly(R1, R2)
    # without the a_1 factor the operators no longer commute
    R1 = scaled_euler_power(a, b1, Poly.constant(1), 1)
    R2 = scaled_euler_power(a, b2, Poly.constant(1), 1)
    assert not commutes_directly(R1, R2)


def test_commute_criterion_needs_linear_factor(z):
    with pytest.raises(HypothesisError):
        commute_criterion(z**3, z, 2 * z, z**2)


def test_commutation_coefficients():
    assert commutation_coefficients(2, 3) == {0: 1, 1: -6, 2: 6}
    assert commutation_coefficients(1, 1) == {0: 1, 1: -1}
    assert commutation_coefficients(0, 4) == {0: 1}
    assert commutation_coefficients(3, 0) == {0: 1}


def test_commutation_expansion(z):
    a, b = z**2 - 1, -z
    E = euler_operator(a, b, 't')
    for n in range(4):
        for k in range(4):
            lhs = compose(DiffOp.multiplication(Poly.monomial(k, 1, 't'), 't'), E**n)
            assert lhs == commutation_expansion(a, b, n, k)


def test_commutation_expansion_random(rng):
    for _ in range(6):
        a = random_poly(rng, 3)
        while a.is_zero():
            a = random_poly(rng, 3)
        b = random_poly(rng, 3)
        E = euler_operator(a, b, 't')
        for n in range(4):
            for k in range(4):
                lhs = compose(DiffOp.multiplication(Poly.monomial(k, 1, 't'), 't'), E**n)
                assert lhs == commutation_expansion(a, b, n, k)
#endregion


#region Cauchy kernel
def test_cauchy_kernel_polynomial():
    assert cauchy_kernel_polynomial(1, 1).is_zero()
    assert cauchy_kernel_polynomial(2, 1).evaluate_t(5) == -1
    assert cauchy_kernel_polynomial(2, 0).evaluate_t(3) == Poly([3, 1])


@pytest.mark.parametrize('t0', [0, 1, 2, -4, Fraction(-1, 3), Fraction(5, 7)])
def test_cauchy_identity(t0):
    for m in range(5):
        for n in range(5):
            res = cauchy_identity_residual(m, n, t0, 15)
            assert res.poly_part.is_zero()
            assert all(c == 0 for c in res.tail.coeffs)
#endregion
