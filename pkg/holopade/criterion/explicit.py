"""Closed formulas for the Chebyshev-family approximants at n = uN.

P_{uN,h}, Q_{uN,l,h} and the remainder R_{uN,l,h} = P f_l - Q_{uN,l,h} of
f_l(z) = sum_k ((1+l)/u)_k / ((u+l)/u)_k z^{-(uk+l+1)}, together with their
numerical values at a rational point alpha.
"""
import dataclasses
import logging
import math
from fractions import Fraction
from typing import Optional

import mpmath

from ..core.laurent import LaurentTail
from ..core.linalg import det_exact
from ..core.numbers import RationalLike, gen_binomial, pochhammer_ratio, to_mpf, to_rational
from ..core.poly import Poly
from ..errors import PrecisionError

log = logging.getLogger()

# stop summing a remainder once the omitted tail is below this share of the partial sum
TAIL_TOLERANCE = mpmath.mpf(2)**-20


def _check_indices(u: int, N: int, l: Optional[int], h: int):
    if u < 2:
        raise ValueError(f'u must be at least 2, got {u}')
    if N < 1:
        raise ValueError(f'N must be positive, got {N}')
    if l is not None and not 0 <= l <= u - 2:
        raise ValueError(f'l = {l} outside 0 .. {u - 2}')
    if not 0 <= h <= u - 1:
        raise ValueError(f'h = {h} outside 0 .. {u - 1}')


def _bracket(u: int, N: int, h: int, k: int) -> Fraction:
    out = Fraction(0)
    for s in range(k + 1):
        out += (gen_binomial(u * N - Fraction(1, u), s + N) * math.comb(u * (s + N) + h, u * N) *
                gen_binomial(Fraction(1, u), k - s))
    return out


def _ratio(u: int, l: int, k: int) -> Fraction:
    return pochhammer_ratio(Fraction(1 + l, u), Fraction(u + l, u), k)


def explicit_P(u: int, N: int, h: int, *, printed_signs: bool = False) -> Poly:
    """P_{uN,h}(z) = (-1)^{uN} (-1)^N sum_k bracket_k (-1)^k z^{uk+h}.

    `printed_signs` drops the (-1)^N coming from the shift of the summation index.
    """
    _check_indices(u, N, None, h)
    sign = (-1)**(u * N) * (1 if printed_signs else (-1)**N)
    coeffs = [Fraction(0)] * (u * (u - 1) * N + h + 1)
    for k in range((u - 1) * N + 1):
        coeffs[u * k + h] = sign * (-1)**k * _bracket(u, N, h, k)
    return Poly(coeffs, 'z')


def explicit_Q(u: int, N: int, l: int, h: int, *, printed_signs: bool = False) -> Poly:
    """Q_{uN,l,h}(z) = sum_{v >= eps} c_v z^{uv+h-l-1}.

    c_v = sum_k p_{u(k+v)+h} ((1+l)/u)_k / ((u+l)/u)_k over the coefficients p of P_{uN,h};
    eps = 1 when h < l + 1.
    """
    _check_indices(u, N, l, h)
    P = explicit_P(u, N, h, printed_signs=printed_signs)
    start = 1 if h < l + 1 else 0
    top = (u - 1) * N
    coeffs = [Fraction(0)] * (u * top + h - l)
    for v in range(start, top + 1):
        terms = (P.coeff(u * (k + v) + h) * _ratio(u, l, k) for k in range(top - v + 1))
        coeffs[u * v + h - l - 1] = sum(terms, Fraction(0))
    return Poly(coeffs, 'z')


def remainder_term(u: int, N: int, l: int, h: int, k: int) -> Fraction:
    """Coefficient of z^{-(uN+l-h+1+uk)} in R_{uN,l,h}, for k >= eps_{l,h}."""
    head = pochhammer_ratio(Fraction(u - 1, u), Fraction(u + l, u), u * N)
    return (head * math.comb(u * (N + k) + l - h, u * N) *
            pochhammer_ratio(Fraction(1 + l, u), Fraction(u + l, u) + u * N, k))


def explicit_R(u: int, N: int, l: int, h: int, precision: int = 10) -> LaurentTail:
    """R_{uN,l,h} as a tail of `precision` coefficients of 1/z^{j+1}, j < precision."""
    _check_indices(u, N, l, h)
    start = 1 if l < h else 0
    coeffs = [Fraction(0)] * precision
    k = start
    while True:
        j = u * N + l - h + u * k
        if j >= precision:
            break
        coeffs[j] = remainder_term(u, N, l, h, k)
        k += 1
    return LaurentTail(coeffs, precision)


def explicit_PQR(u: int,
                 N: int,
                 l: int,
                 h: int,
                 *,
                 precision: int = 10,
                 printed_signs: bool = False) -> tuple[Poly, Poly, LaurentTail]:
    return (explicit_P(u, N, h, printed_signs=printed_signs),
            explicit_Q(u, N, l, h, printed_signs=printed_signs), explicit_R(u, N, l, h, precision))


#region values at alpha
def remainder_value(u: int, N: int, l: int, h: int, alpha: RationalLike, *,
                    tolerance: mpmath.mpf = TAIL_TOLERANCE, max_terms: int = 100_000) -> mpmath.mpf:
    """R_{uN,l,h}(alpha) for |alpha| > 1, at the ambient mpmath precision.

    Terms are summed until the geometric bound on the omitted tail, from the
    decreasing ratio of consecutive binomials, drops below `tolerance` times
    the partial sum.
    """
    alpha = to_rational(alpha)
    if abs(alpha) <= 1:
        raise ValueError(f'the remainder series needs |alpha| > 1, got {alpha}')
    start = 1 if l < h else 0
    x = to_mpf(alpha)
    inv_u = 1 / abs(x)**u
    total = mpmath.mpf(0)
    for k in range(start, start + max_terms):
        term = to_mpf(remainder_term(u, N, l, h, k)) / x**(u * N + l - h + 1 + u * k)
        total += term
        m = u * (N + k) + l - h
        q = mpmath.mpf(math.comb(m + u, u * N)) / math.comb(m, u * N) * inv_u
        if q < 1 and abs(term) * q / (1 - q) <= tolerance * abs(total):
            return total
    raise PrecisionError(f'remainder at alpha = {alpha} did not settle within {max_terms} terms')


def theta_values(u: int, alpha: RationalLike) -> list[mpmath.mpf]:
    """theta_l = alpha^{-(l+1)} 2F1((1+l)/u, 1; (u+l)/u | alpha^{-u}), l = 0 .. u-2."""
    x = to_mpf(to_rational(alpha))
    return [
        mpmath.hyp2f1(mpmath.mpf(1 + l) / u, 1, mpmath.mpf(u + l) / u, 1 / x**u) / x**(l + 1)
        for l in range(u - 1)
    ]


@dataclasses.dataclass
class LinearFormCheck:
    u: int
    N: int
    alpha: Fraction
    residuals: dict[tuple[int, int], mpmath.mpf]
    remainders: dict[tuple[int, int], mpmath.mpf]

    @property
    def worst_relative(self) -> mpmath.mpf:
        return max(abs(r) / abs(self.remainders[key]) for key, r in self.residuals.items())

    def ok(self, bound: mpmath.mpf = mpmath.mpf(2)**-16) -> bool:
        return self.worst_relative <= bound


def linear_form_check(u: int, N: int, alpha: RationalLike, *, prec: int = 53) -> LinearFormCheck:
    """P(alpha) theta_l - Q(alpha) against R(alpha), evaluated with enough guard bits."""
    alpha = to_rational(alpha)
    guard = int((u * u * N + u + 2) * math.log2(max(abs(alpha), 2))) + u * (u + 1) * N + 32
    residuals, remainders = {}, {}
    with mpmath.workprec(prec + guard):
        thetas = theta_values(u, alpha)
        x = to_mpf(alpha)
        for h in range(u):
            P = explicit_P(u, N, h)
            p_val = P(x)
            for l in range(u - 1):
                Q = explicit_Q(u, N, l, h)
                R = remainder_value(u, N, l, h, alpha, tolerance=mpmath.mpf(2)**-(prec + 8))
                remainders[(l, h)] = R
                residuals[(l, h)] = p_val * thetas[l] - Q(x) - R
    log.debug(f'linear forms at alpha = {alpha}: {len(residuals)} residuals computed')
    return LinearFormCheck(u, N, alpha, residuals, remainders)
#endregion


def m_matrix(u: int, N: int, alpha: RationalLike) -> list[list[Fraction]]:
    """Rows P_{uN,h}(alpha) and Q_{uN,l,h}(alpha), columns h = 0 .. u-1."""
    alpha = to_rational(alpha)
    rows = [[explicit_P(u, N, h)(alpha) for h in range(u)]]
    for l in range(u - 1):
        rows.append([explicit_Q(u, N, l, h)(alpha) for h in range(u)])
    return rows


def m_matrix_det(u: int, N: int, alpha: RationalLike) -> Fraction:
    return det_exact(m_matrix(u, N, alpha))


if __name__ == '__main__':
    P, Q, R = explicit_PQR(2, 1, 0, 0)
    assert P == Poly([Fraction(-3, 2), 0, 3])
    assert Q == Poly([0, 3])
    assert R.coeff(2) == Fraction(3, 8) and R.coeff(4) == Fraction(3, 8)
    print('Passed')
