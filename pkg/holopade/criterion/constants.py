"""The constants A, B, U, V, mu and C of the linear-independence criterion.

Every quantity is a combination of logarithms of integers, so it can be
evaluated twice from the same code: once with mpmath at the working
precision for the report and once with mpmath.iv to certify the sign of
V - epsilon.
"""
import dataclasses
import logging
from fractions import Fraction
from typing import Optional

import mpmath

from ..core.numbers import RationalLike, to_rational
from ..errors import HypothesisError, PrecisionError
from .arith import euler_phi, interval_bounds, interval_precision, log_nu, prime_divisors
from .places import INFINITE_PLACE, PlaceQ, abs_v, valuation

log = logging.getLogger()


def _log_q(ctx, q: Fraction):
    return ctx.log(abs(q.numerator)) - ctx.log(q.denominator)


def _h_v(ctx, beta: Fraction, v: PlaceQ):
    a = abs_v(beta, v)
    return _log_q(ctx, a) if a > 1 else ctx.mpf(0)


def _height(ctx, beta: Fraction):
    return ctx.log(max(abs(beta.numerator), beta.denominator))


def _log_inv_abs_nu(ctx, u: int, p: int):
    """log |nu(u)|_p^{-1} = v_p(u) log p + [p | u] log p / (p - 1)."""
    out = valuation(u, p) * ctx.log(p)
    if p in prime_divisors(u):
        out += ctx.log(p) / (p - 1)
    return out


def _quantities(ctx, u: int, alpha: Fraction, v0: PlaceQ) -> tuple:
    h_alpha = _height(ctx, alpha)
    hv = _h_v(ctx, alpha, v0)
    log2 = ctx.log(2)
    if v0.is_infinite:
        A = hv - log2
        bracket = (u + 1) * log2
    else:
        p = v0.p
        eps = 1 if u % p else 0
        # log |p|_p = -log p
        A = hv + eps * ctx.log(p) / (p - 1)
        bracket = _log_inv_abs_nu(ctx, u, p)
    B = ((u - 1) * h_alpha + (u + 1) * log2 + (2 * u - 1) * log_nu(u, ctx=ctx) / u +
         ctx.mpf(u - 1) / euler_phi(u) - (u - 1) * hv - bracket)
    U = (u - 1) * hv + bracket
    return A, B, U, A - B


@dataclasses.dataclass
class CriterionReport:
    u: int
    alpha: Fraction
    v0: PlaceQ
    epsilon: Fraction
    A: mpmath.mpf
    B: mpmath.mpf
    U: mpmath.mpf
    V: mpmath.mpf
    mu: Optional[mpmath.mpf]
    C: Optional[mpmath.mpf]
    precision_bits: int

    @property
    def applicable(self) -> bool:
        return self.mu is not None

    @property
    def eps_v0(self) -> Optional[int]:
        if self.v0.is_infinite:
            return None
        return 1 if self.u % self.v0.p else 0

    @property
    def digits(self) -> int:
        return max(int(self.precision_bits * 0.30103) - 3, 5)

    def to_json(self) -> dict:

        def nstr(x):
            return mpmath.nstr(x, self.digits) if x is not None else None

        return {
            'u': self.u,
            'alpha': str(self.alpha),
            'place': self.v0.to_json(),
            'epsilon': str(self.epsilon),
            'eps_v0': self.eps_v0,
            'A': nstr(self.A),
            'B': nstr(self.B),
            'U': nstr(self.U),
            'V': nstr(self.V),
            'mu': nstr(self.mu),
            'C': nstr(self.C),
            'applicable': self.applicable,
            'precision_bits': self.precision_bits,
        }


def criterion_constants(u: int,
                        alpha: RationalLike,
                        v0: PlaceQ = INFINITE_PLACE,
                        epsilon: RationalLike = Fraction(1, 10),
                        *,
                        prec: int = 64) -> CriterionReport:
    alpha, epsilon = to_rational(alpha), to_rational(epsilon)
    if u < 2:
        raise HypothesisError(f'the criterion needs u >= 2, got {u}')
    if abs_v(alpha, v0) <= 2:
        raise HypothesisError(f'the criterion needs |alpha|_v0 > 2, got |{alpha}|_{v0} = '
                              f'{abs_v(alpha, v0)}')
    if epsilon <= 0:
        raise HypothesisError(f'epsilon must be positive, got {epsilon}')
    with interval_precision(prec) as iv:
        *_, V_iv = _quantities(iv, u, alpha, v0)
        gap = V_iv - iv.mpf(epsilon.numerator) / epsilon.denominator
    with mpmath.workprec(prec):
        lo, hi = interval_bounds(gap)
        if lo <= 0 < hi:
            raise PrecisionError(f'{prec} bits do not decide the sign of V - epsilon')
        A, B, U, V = _quantities(mpmath.mp, u, alpha, v0)
        mu = C = None
        if lo > 0:
            d = V - mpmath.mpf(epsilon.numerator) / epsilon.denominator
            mu = (A + U) / d
            C = mpmath.exp(-(mpmath.log(2) / d + 1) * (A + U))
    report = CriterionReport(u, alpha, v0, epsilon, A, B, U, V, mu, C, prec)
    log.info(f'u = {u}, alpha = {alpha}, v0 = {v0}: V = {mpmath.nstr(V, 8)}, '
             f'{"applicable" if report.applicable else "not applicable"}')
    return report
