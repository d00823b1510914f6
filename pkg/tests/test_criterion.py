from fractions import Fraction

import mpmath
import numpy as np
import pytest
import sympy
from conftest import DATA, random_fraction

from holopade.core.poly import Poly
from holopade.criterion.arith import (THRESHOLD_RANGE, V_alpha, den, euler_phi, log_nu, mu_n,
                                      nu_exact, parse_u_range, render_table_json,
                                      render_table_markdown, threshold_cents, threshold_table,
                                      threshold_value)
from holopade.criterion.constants import criterion_constants
from holopade.criterion.estimates import (decay_check, denominator_growth,
                                          pochhammer_ratio_denominators)
from holopade.criterion.explicit import (explicit_P, explicit_Q, explicit_R, linear_form_check,
                                         m_matrix_det, remainder_value, theta_values)
from holopade.criterion.gop import g_operator_check, g_operator_from_polys
from holopade.criterion.places import (INFINITE_PLACE, PlaceQ, abs_v, h_v, height,
                                       height_decomposition, log_abs_v, places_of,
                                       projective_height, valuation)
from holopade.errors import HypothesisError
from holopade.holonomic.families import FamilySpec, family_streams
from holopade.pade.construct import construct_family
from holopade.pade.phi import PhiMap, remainder_coefficients

TABLE = ['3.78', '4.44', '5.84', '5.32', '8.76', '5.91', '7.65', '7.22', '9.40', '6.73', '10.59',
         '7.04', '9.92', '9.52']


#region places
def test_place_parse():
    assert PlaceQ.parse('inf') == INFINITE_PLACE
    assert PlaceQ.parse(' 7 ') == PlaceQ(7)
    assert PlaceQ(5).to_json() == '5'
    with pytest.raises(ValueError):
        PlaceQ(4)
    with pytest.raises(ValueError):
        PlaceQ.parse('p3')
    with pytest.raises(NotImplementedError):
        PlaceQ.parse('(2, 1+i)')


def test_absolute_values():
    assert valuation(Fraction(12, 5), 2) == 2
    assert valuation(Fraction(12, 5), 5) == -1
    assert abs_v(Fraction(3, 4), PlaceQ(2)) == 4
    assert abs_v(Fraction(-3, 4), INFINITE_PLACE) == Fraction(3, 4)
    assert abs_v(0, PlaceQ(3)) == 0
    assert float(h_v(Fraction(1, 9), PlaceQ(3))) == pytest.approx(2 * np.log(3))
    assert h_v(9, PlaceQ(3)) == 0
    with pytest.raises(ValueError):
        valuation(0, 2)


def test_product_formula(rng):
    for _ in range(50):
        x = random_fraction(rng, 40) or Fraction(7, 3)
        total = sum(log_abs_v(x, v) for v in places_of([x]))
        assert abs(total) < 1e-12


def test_heights():
    x = Fraction(3, 4)
    assert float(height(x)) == pytest.approx(np.log(4))
    assert float(sum(height_decomposition(x).values())) == pytest.approx(float(height(x)))
    assert float(projective_height([1, x])) == pytest.approx(float(height(x)))
    assert float(projective_height([2, 4])) == pytest.approx(np.log(2))
    with pytest.raises(ValueError):
        projective_height([0, 0])


def test_height_is_sum_of_local_heights(rng):
    for _ in range(500):
        p = int(rng.integers(1, 10**6 + 1)) * int(rng.choice([-1, 1]))
        q = int(rng.integers(1, 10**6 + 1))
        beta = Fraction(p, q)
        local = sum(h_v(beta, v) for v in places_of([beta]))
        assert abs(local - height(beta)) < 1e-12
        assert abs(sum(height_decomposition(beta).values()) - local) < 1e-12
#endregion


#region arithmetic constants
def test_small_arithmetic():
    assert den([Fraction(1, 2), Fraction(1, 3)]) == 6
    assert den([]) == 1
    assert mu_n(Fraction(1, 2), 2) == 16
    assert mu_n(Fraction(2, 3), 3) == 27 * 3
    assert euler_phi(12) == 4
    assert nu_exact(2) == 4
    assert nu_exact(6) == 6 * 2 * sympy.sqrt(3)
    assert float(log_nu(6)) == pytest.approx(np.log(6) + np.log(2) + np.log(3) / 2)
    with pytest.raises(ValueError):
        log_nu(1)


def test_parse_u_range():
    assert parse_u_range('2..4') == [2, 3, 4]
    assert parse_u_range('2,5') == [2, 5]
    assert parse_u_range('7') == [7]


def test_threshold_table():
    rows = threshold_table()
    assert [r.u for r in rows] == list(THRESHOLD_RANGE)
    assert [r.text for r in rows] == TABLE
    for r in rows:
        assert float(r.value) <= r.cents / 100 < float(r.value) + 0.01


def test_threshold_is_certified_at_higher_precision():
    assert threshold_cents(2, prec=200) == 378
    assert threshold_cents(11, prec=128) == 673


def test_render_table():
    rows = threshold_table()
    assert render_table_markdown(rows) == (DATA / 'threshold_table.md').read_text()
    out = render_table_json(rows, digits=6)
    assert out['rows'][0] == {'u': 2, 'threshold': '3.78', 'value': '3.77259'}


def test_V_alpha():
    with mpmath.workprec(64):
        expected = float(mpmath.log(64) - threshold_value(2))
    assert float(V_alpha(2, 64)) == pytest.approx(expected)
    assert V_alpha(2, 64) > 0
    assert V_alpha(2, 40) < 0
    with pytest.raises(HypothesisError):
        V_alpha(2, Fraction(5, 2))
    with pytest.raises(HypothesisError):
        V_alpha(2, -1)
#endregion


#region explicit formulas
def test_explicit_formulas(z):
    P, Q, R = explicit_P(2, 1, 0), explicit_Q(2, 1, 0, 0), explicit_R(2, 1, 0, 0, 6)
    assert P == 3 * z**2 - Fraction(3, 2)
    assert Q == 3 * z
    assert R.coeffs == (0, 0, Fraction(3, 8), 0, Fraction(3, 8), 0)
    assert explicit_P(2, 1, 1) == 6 * z**3 - Fraction(9, 2) * z
    assert explicit_Q(2, 1, 0, 1) == 6 * z**2 - Fraction(3, 2)
    assert explicit_R(2, 1, 0, 1, 6).coeffs == (0, 0, 0, Fraction(3, 16), 0, Fraction(15, 64))


def test_explicit_matches_construction():
    fam = family_streams(FamilySpec('chebyshev', u=2))
    phi = PhiMap(fam.streams[0][0])
    for h in (0, 1):
        system = construct_family(fam, 2, h)
        assert system.P == explicit_P(2, 1, h)
        assert system.Qs[0] == explicit_Q(2, 1, 0, h)
        assert remainder_coefficients(phi, system.P, 12) == explicit_R(2, 1, 0, h, 12)


def test_printed_signs_flip_odd_N():
    assert explicit_P(2, 1, 0, printed_signs=True) == -explicit_P(2, 1, 0)
    assert explicit_P(2, 2, 0, printed_signs=True) == explicit_P(2, 2, 0)


def test_index_checks():
    with pytest.raises(ValueError):
        explicit_P(2, 0, 0)
    with pytest.raises(ValueError):
        explicit_Q(3, 1, 2, 0)
    with pytest.raises(ValueError):
        explicit_P(3, 1, 3)
    with pytest.raises(ValueError):
        remainder_value(2, 1, 0, 0, 1)


def test_theta_values():
    with mpmath.workprec(80):
        theta = theta_values(2, 5)[0]
        assert abs(theta - 1 / mpmath.sqrt(24)) < mpmath.mpf(10)**-20


def test_linear_forms():
    for alpha in (5, Fraction(-7, 2), Fraction(9, 4)):
        assert linear_form_check(2, 1, alpha).ok()


def test_m_matrix_det():
    assert m_matrix_det(2, 1, 5) == Fraction(9, 4)
#endregion


#region growth and decay
def test_pochhammer_denominators():
    report = pochhammer_ratio_denominators(Fraction(1, 2), 1, 3)
    assert report.denominators == [1, 2, 8, 16]
    assert float(report.bound) == pytest.approx(2 * np.log(2) + 1)


def test_denominator_growth():
    report = denominator_growth(2, 40)
    assert report.within(1, 40)
    # (1/2)_n / n! has denominator 4^n up to a power of 2 below 2n
    assert float(report.ratio(40)) == pytest.approx(np.log(4), abs=0.1)
    assert 'aggregate_bound' in report.to_json(6)
    with pytest.raises(ValueError):
        denominator_growth(1, 3)


def test_archimedean_decay():
    u, alpha = 2, 10
    report = decay_check(u, alpha, [1, 2, 3, 4])
    fit = report.fit('remainder')
    assert fit.holds
    assert fit.slope == pytest.approx(-u * np.log(alpha), abs=0.6)
    assert report.fit('P').slope > 0
    assert report.to_json()['place'] == 'inf'


@pytest.mark.slow
@pytest.mark.parametrize('u', [2, 3])
def test_denominator_growth_long_range(u):
    report = denominator_growth(u, 300)
    assert report.within(100, 300)
    assert len(report.ratios) == 300


@pytest.mark.slow
@pytest.mark.parametrize('alpha', [10, 64])
def test_archimedean_decay_long_range(alpha):
    report = decay_check(2, alpha, range(1, 9))
    fit = report.fit('remainder')
    assert fit.holds
    assert fit.slope == pytest.approx(-2 * np.log(alpha), abs=0.6)
    assert report.printed_bound_holds


def test_padic_decay():
    report = decay_check(2, Fraction(1, 3), [1, 2, 3, 4, 5, 6], place=PlaceQ(3))
    assert [f.name for f in report.fits] == ['remainder']
    assert report.fit('remainder').slope <= -2 * np.log(3) + 0.4


@pytest.mark.parametrize('kwargs', [
    dict(u=2, alpha=2, Ns=[1, 2]),
    dict(u=2, alpha=Fraction(1, 3), Ns=[1, 2], place=PlaceQ(2)),
    dict(u=3, alpha=Fraction(1, 3), Ns=[1, 2], place=PlaceQ(3)),
    dict(u=2, alpha=3, Ns=[1, 2], place=PlaceQ(3)),
])
def test_decay_hypotheses(kwargs):
    with pytest.raises(HypothesisError):
        decay_check(**kwargs)


def test_decay_needs_two_points():
    with pytest.raises(ValueError):
        decay_check(2, 10, [3])
#endregion


#region criterion
def test_criterion_u2():
    report = criterion_constants(2, 64, prec=96)
    assert report.applicable
    assert float(report.U) == pytest.approx(np.log(64) + 3 * np.log(2))
    assert float(report.V) == pytest.approx(float(V_alpha(2, 64)))
    # A + U = 14 log 2 and V = 2 log 2 - 1
    assert float(report.mu) == pytest.approx(14 * np.log(2) / (2 * np.log(2) - 1.1))
    assert report.C > 0
    out = report.to_json()
    assert out['place'] == 'inf' and out['eps_v0'] is None
    assert out['applicable'] is True


def test_criterion_not_applicable():
    report = criterion_constants(2, 40)
    assert float(report.V) < 0
    assert not report.applicable
    assert report.to_json()['mu'] is None


def test_criterion_padic():
    report = criterion_constants(2, Fraction(1, 27), PlaceQ(3))
    assert report.eps_v0 == 1
    assert float(report.U) == pytest.approx(np.log(27))


@pytest.mark.parametrize('args', [
    (1, 64),
    (2, 2),
    (2, 3, PlaceQ(3)),
    (2, 64, INFINITE_PLACE, 0),
])
def test_criterion_hypotheses(args):
    with pytest.raises(HypothesisError):
        criterion_constants(*args)
#endregion


#region G-operators
def test_g_operator_rational():
    report = g_operator_check([1, -1], [0], 1)
    assert report.residues == [sympy.Rational(1, 2), sympy.Rational(1, 2)]
    assert report.rational is True
    assert report.to_json()['g_operator'] is True


def test_g_operator_irrational():
    report = g_operator_check(['sqrt(2)', 0], [1], 1)
    assert report.extra is not None
    assert report.rational is False


def test_g_operator_from_polys(z):
    report = g_operator_from_polys(z**2 - 1, z)
    assert all(r == sympy.Rational(1, 2) for r in report.residues)
    assert report.rational is True
    with pytest.raises(ValueError):
        g_operator_from_polys(z**2 - 1, Poly.constant(1))


@pytest.mark.parametrize('alphas,betas', [
    ([1], []),
    ([1, 2], [0, 1]),
    ([1, 1], [0]),
])
def test_g_operator_validation(alphas, betas):
    with pytest.raises(ValueError):
        g_operator_check(alphas, betas, 1)
#endregion
