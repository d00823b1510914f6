from fractions import Fraction

import pytest
from conftest import random_operator, random_poly

from holopade.core.bipoly import divided_difference
from holopade.core.poly import Poly
from holopade.errors import DegenerateApproximantError, HypothesisError
from holopade.holonomic.families import FamilySpec, family_streams
from holopade.pade.construct import (check_splitting, construct_family, cross_factor,
                                     family_polynomial, top_coefficient_check,
                                     rodrigues_kernel_check)
from holopade.pade.oracle import (kernel_dimension, oracle_contains, proportional,
                                  solve_pade_oracle)
from holopade.pade.phi import (PhiMap, kernel_member, phi_apply, phi_bivariate,
                               q_and_remainder, remainders_agree)
from holopade.pade.system import verify
from holopade.weyl.diffop import adjoint, apply
from holopade.weyl.rodrigues import FirstOrderData

STREAM_POOL = [
    FamilySpec('chebyshev', u=3),
    FamilySpec('bessel', gamma=(0, Fraction(1, 2))),
    FamilySpec('hermite', gamma=(1, ), delta=(0, Fraction(1, 3))),
    FamilySpec('laguerre-gamma', gamma=(1, ), delta=(Fraction(1, 2), )),
    FamilySpec('laguerre-delta', gamma=(2, ), delta=(0, )),
    FamilySpec('lerch', gamma=(Fraction(1, 2), ), alpha=(1, 3)),
]

SMALL_GRID = [
    (FamilySpec('chebyshev', u=2), (1, 2, 3)),
    (FamilySpec('chebyshev', u=3), (1, 2)),
    (FamilySpec('bessel', gamma=(0, Fraction(1, 2))), (1, 2)),
    (FamilySpec('hermite', gamma=(1, ), delta=(0, 1)), (1, 2)),
    (FamilySpec('laguerre-gamma', gamma=(1, 2), delta=(0, )), (1, )),
]


def stream_pool():
    return [s for spec in STREAM_POOL for s in family_streams(spec).flat_streams()]


def tail_and_adjoint_values(D, f, count=13):
    """k-th coefficient of the 1/z-part of D . f next to phi_f(D* . t^k), for k < count."""
    tail = apply(D, f.tail(40)).tail
    Ds = adjoint(D)
    phi = PhiMap(f)
    return [(tail.coeff(k), phi_apply(phi, apply(Ds, Poly.monomial(k, 1, 't'))))
            for k in range(count)]


def chebyshev_stream():
    return family_streams(FamilySpec('chebyshev', u=2)).streams[0][0]


def factorial_stream():
    # f_k = k!
    return family_streams(FamilySpec('laguerre-gamma', gamma=(1, ), delta=(0, ))).streams[0][0]


#region phi
def test_phi_examples(z):
    phi = PhiMap(chebyshev_stream())
    assert phi_apply(phi, Poly([1, 0, 1], 't')) == Fraction(3, 2)
    assert phi(Poly.zero('t')) == 0
    assert phi_bivariate(phi, divided_difference(z**2)) == z
    assert not kernel_member(phi, Poly.constant(1, 't'))
    assert kernel_member(phi, Poly.x('t'))


def test_q_and_remainder(z):
    phi = PhiMap(chebyshev_stream())
    Q, R = q_and_remainder(phi, z, 4)
    assert Q == 1
    assert R.coeffs == (0, Fraction(1, 2), 0, Fraction(3, 8))
    assert remainders_agree(phi, z, Q, R)
    assert not remainders_agree(phi, z, Q + 1, R)


@pytest.mark.parametrize('spec', [
    FamilySpec('chebyshev', u=2),
    FamilySpec('chebyshev', u=4),
    FamilySpec('bessel', gamma=(Fraction(1, 3), )),
    FamilySpec('hermite', gamma=(2, ), delta=(Fraction(-1, 2), )),
    FamilySpec('laguerre-gamma', gamma=(1, ), delta=(0, )),
    FamilySpec('lerch', gamma=(Fraction(1, 2), ), alpha=(1, 3)),
], ids=lambda s: s.family)
def test_adjoint_image_is_in_kernel(spec):
    fam = family_streams(spec)
    for F, row in zip(fam.operators, fam.streams):
        Ds = adjoint(F.operator)
        for s in row:
            for k in range(13):
                assert kernel_member(PhiMap(s), apply(Ds, Poly.monomial(k, 1, 't')))


def test_tail_coefficients_are_adjoint_values(rng):
    streams = stream_pool()
    for i in range(80):
        D = random_operator(rng, max_order=3)
        for lhs, rhs in tail_and_adjoint_values(D, streams[i % len(streams)]):
            assert lhs == rhs


def test_nonzero_tail_is_seen_by_adjoint(rng):
    streams = stream_pool()
    seen = 0
    for i in range(60):
        D = random_operator(rng, max_order=3)
        pairs = tail_and_adjoint_values(D, streams[i % len(streams)])
        if any(lhs != 0 for lhs, _ in pairs):
            seen += 1
            assert any(rhs != 0 for _, rhs in pairs)
    assert seen > 30
#endregion


#region oracle
def test_oracle_example():
    system = solve_pade_oracle([factorial_stream()], [1], 1)
    assert system.kernel_dimension == 1
    assert proportional(system.P, Poly([-1, 1]))
    assert system.verified
    assert system.Qs == [Poly.constant(1)]


def test_oracle_needs_enough_unknowns():
    with pytest.raises(ValueError):
        solve_pade_oracle([factorial_stream()], [3], 2)


def test_proportional(z):
    assert proportional(z - 1, 3 * z - 3)
    assert not proportional(z - 1, z + 1)
    assert not proportional(Poly.zero(), z)
#endregion


#region construction
@pytest.mark.parametrize('spec,ns', SMALL_GRID, ids=[s.family for s, _ in SMALL_GRID])
def test_construct_matches_oracle(spec, ns):
    fam = family_streams(spec)
    streams = fam.flat_streams()
    for n in ns:
        weights = [n] * len(streams)
        for h in range(fam.W + 1):
            system = construct_family(fam, n, h)
            assert system.verified
            assert system.P.degree <= fam.M(h, n)
            assert oracle_contains(system.P, streams, weights)
        M = fam.M(0, n)
        assert kernel_dimension(streams, weights, M) == 1
        oracle = solve_pade_oracle(streams, weights, M)
        assert proportional(construct_family(fam, n, 0).P, oracle.P)


@pytest.mark.slow
@pytest.mark.parametrize('spec', [
    FamilySpec('chebyshev', u=4),
    FamilySpec('bessel', gamma=(0, Fraction(1, 3), Fraction(2, 3))),
    FamilySpec('hermite', gamma=(1, ), delta=(0, Fraction(1, 2))),
    FamilySpec('laguerre-gamma', gamma=(1, 2), delta=(0, )),
    FamilySpec('laguerre-delta', gamma=(1, ), delta=(0, Fraction(1, 2))),
    FamilySpec('lerch', gamma=(0, ), alpha=(1, 2)),
], ids=lambda s: s.family)
def test_construct_larger_grid(spec):
    fam = family_streams(spec)
    streams = fam.flat_streams()
    for n in (1, 2, 3, 4):
        for h in range(fam.W + 1):
            system = construct_family(fam, n, h)
            assert system.verified
            assert oracle_contains(system.P, streams, [n] * len(streams))


def test_bessel_polynomial(z):
    fam = family_streams(FamilySpec('bessel', gamma=(0, Fraction(1, 2))))
    P = family_polynomial(fam, 1, 0)
    assert P == Fraction(21, 2) * z**2 - Fraction(11, 2) * z + 1


def test_verify_with_zero_slack():
    fam = family_streams(FamilySpec('bessel', gamma=(0, Fraction(1, 2))))
    system = construct_family(fam, 2, 1)
    status = verify(system, fam.flat_streams(), slack=0)
    assert status.verified
    assert all(ok is True for ok in status.orders_ok)
    assert status.precision == 2
    with pytest.raises(ValueError):
        verify(system, fam.flat_streams(), slack=-1)


def test_construct_rejects_h(z):
    fam = family_streams(FamilySpec('chebyshev', u=2))
    with pytest.raises(ValueError):
        construct_family(fam, 1, 5)


def test_degenerate_custom_family(z):
    fam = family_streams(FamilySpec('custom', a=z**2, b=(-2 * z, )))
    with pytest.raises(DegenerateApproximantError):
        construct_family(fam, 1, 0)


def test_custom_family_constructs(z):
    fam = family_streams(FamilySpec('custom', a=z**2 - 1, b=(-z, )))
    system = construct_family(fam, 2, 0)
    assert system.verified
    cheb = construct_family(family_streams(FamilySpec('chebyshev', u=2)), 2, 0)
    assert proportional(system.P, cheb.P)
#endregion


#region coefficient identities
def test_rodrigues_kernel_check(rng, z):
    F = FirstOrderData.from_polys(z**2 - 1, -z)
    f = chebyshev_stream()
    for n in (1, 2, 3):
        G = random_poly(rng, 3)
        for k in range(n):
            assert rodrigues_kernel_check(F, f, n, G, k)
    with pytest.raises(ValueError):
        rodrigues_kernel_check(F, f, 2, z, 2)


def test_cross_factor():
    fam = family_streams(FamilySpec('bessel', gamma=(0, Fraction(1, 2))))
    check_splitting(fam)
    assert cross_factor(fam, 0, 1) == Fraction(-1, 2)
    assert cross_factor(fam, 0, 2) == Fraction(-1, 2) * Fraction(-3, 2)


@pytest.mark.parametrize('spec', [
    FamilySpec('bessel', gamma=(0, Fraction(1, 2))),
    FamilySpec('hermite', gamma=(1, ), delta=(0, 1, Fraction(1, 2))),
    FamilySpec('laguerre-delta', gamma=(2, ), delta=(0, Fraction(1, 3))),
], ids=lambda s: s.family)
def test_coefficient_lemma(spec):
    fam = family_streams(spec)
    for n in (1, 2):
        for j in range(fam.d):
            for h in range(fam.W):
                assert top_coefficient_check(fam, n, h, j, 0).match


def test_splitting_must_be_linear(z):
    fam = family_streams(FamilySpec('custom', a=z**2, a1=z**2, b=(z, 2 * z)))
    with pytest.raises(HypothesisError):
        check_splitting(fam)
#endregion
