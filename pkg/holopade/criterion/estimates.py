"""Empirical checks of the size estimates: denominator growth and decay slopes.

The asymptotic bounds hold up to o(N); slopes are fitted with numpy and
compared with a declared slack, never asserted exactly.
"""
import dataclasses
import logging
import math
from fractions import Fraction
from typing import Optional, Sequence

import mpmath
import numpy as np

from ..core.numbers import RationalLike, pochhammer_ratio, to_rational
from ..errors import HypothesisError, PrecisionError
from .arith import euler_phi, log_mu_const, log_nu
from .explicit import explicit_P, explicit_Q, remainder_term, remainder_value
from .places import PlaceQ, h_v, log_abs_v, valuation

log = logging.getLogger()


#region denominators
def _ratio_denominators(a: Fraction, b: Fraction, n: int) -> list[int]:
    """D_k = den{(a)_i / (b)_i : i <= k} for k = 0 .. n."""
    out, r, d = [], Fraction(1), 1
    for k in range(n + 1):
        if k:
            r *= (a + k - 1) / (b + k - 1)
        d = math.lcm(d, r.denominator)
        out.append(d)
    return out


def pair_bound(a: RationalLike, b: RationalLike) -> mpmath.mpf:
    """log mu(a) + den(b) / phi(den(b))."""
    db = to_rational(b).denominator
    return log_mu_const(a) + mpmath.mpf(db) / euler_phi(db)


@dataclasses.dataclass
class GrowthReport:
    """(1/n) log D_n for n = 1 .. n_max, with the bounds it is compared with."""
    pairs: list[tuple[Fraction, Fraction]]
    denominators: list[int]
    bound: mpmath.mpf
    aggregate_bound: Optional[mpmath.mpf] = None

    def ratio(self, n: int) -> mpmath.mpf:
        return mpmath.log(self.denominators[n]) / n

    @property
    def ratios(self) -> list[tuple[int, mpmath.mpf]]:
        return [(n, self.ratio(n)) for n in range(1, len(self.denominators))]

    def within(self, lo: int, hi: int, slack: float = 0.15) -> bool:
        return all(self.ratio(n) <= self.bound + slack for n in range(lo, hi + 1))

    def to_json(self, digits: int = 15) -> dict:
        out = {
            'pairs': [[str(a), str(b)] for a, b in self.pairs],
            'bound': mpmath.nstr(self.bound, digits),
            'ratios': [[n, mpmath.nstr(r, digits)] for n, r in self.ratios],
        }
        if self.aggregate_bound is not None:
            out['aggregate_bound'] = mpmath.nstr(self.aggregate_bound, digits)
            out['aggregate_bound_holds'] = all(r <= self.aggregate_bound for _, r in self.ratios)
        return out


def pochhammer_ratio_denominators(a: RationalLike, b: RationalLike, n: int) -> GrowthReport:
    a, b = to_rational(a), to_rational(b)
    return GrowthReport([(a, b)], _ratio_denominators(a, b, n), pair_bound(a, b))


def denominator_growth(u: int, n_max: int) -> GrowthReport:
    """D_n = den{((1+l)/u)_k / ((u+l)/u)_k : l <= u-2, k <= n}.

    `bound` is the sum over l of the per-pair bounds, which caps the lcm;
    `aggregate_bound` is log nu(u) + u / phi(u), the per-index rate of the
    aggregate estimate, and is only reported.
    """
    if u < 2:
        raise ValueError(f'u must be at least 2, got {u}')
    pairs = [(Fraction(1 + l, u), Fraction(u + l, u)) for l in range(u - 1)]
    per_pair = [_ratio_denominators(a, b, n_max) for a, b in pairs]
    joint = [math.lcm(*ds) for ds in zip(*per_pair)]
    bound = sum((pair_bound(a, b) for a, b in pairs), mpmath.mpf(0))
    aggregate = log_nu(u) + mpmath.mpf(u) / euler_phi(u)
    log.info(f'u = {u}: D_{n_max} has {joint[-1].bit_length()} bits')
    return GrowthReport(pairs, joint, bound, aggregate)
#endregion


#region decay
@dataclasses.dataclass
class SlopeFit:
    name: str
    Ns: list[int]
    logs: list[float]
    slope: float
    bound: float
    slack: float

    @property
    def holds(self) -> bool:
        return self.slope <= self.bound + self.slack

    def to_json(self) -> dict:
        return {
            'name': self.name,
            'N': self.Ns,
            'log_values': self.logs,
            'slope': self.slope,
            'bound': self.bound,
            'slack': self.slack,
            'holds': self.holds,
        }


def _fit(name: str, Ns: Sequence[int], logs: Sequence[float], bound: float,
         slack: float) -> SlopeFit:
    slope = float(np.polyfit(np.asarray(Ns, dtype=float), np.asarray(logs, dtype=float), 1)[0])
    return SlopeFit(name, list(Ns), [float(x) for x in logs], slope, bound, slack)


@dataclasses.dataclass
class DecayReport:
    u: int
    alpha: Fraction
    place: PlaceQ
    fits: list[SlopeFit]

    def fit(self, name: str) -> SlopeFit:
        return next(f for f in self.fits if f.name == name)

    @property
    def printed_bound_holds(self) -> bool:
        return self.fit('remainder').holds

    def to_json(self) -> dict:
        return {
            'u': self.u,
            'alpha': str(self.alpha),
            'place': self.place.to_json(),
            'fits': [f.to_json() for f in self.fits],
            'printed_bound_holds': self.printed_bound_holds,
        }


def _archimedean(u: int, alpha: Fraction, Ns: Sequence[int], slack: float,
                 prec: int) -> DecayReport:
    if abs(alpha) <= 2:
        raise HypothesisError(f'the archimedean remainder estimate needs |alpha| > 2, got {alpha}')
    log_r, log_p, log_q = [], [], []
    for N in Ns:
        guard = int((u * u * N + u) * math.log2(abs(alpha))) + 32
        with mpmath.workprec(prec + guard):
            x = mpmath.mpf(alpha.numerator) / alpha.denominator
            R = max(abs(remainder_value(u, N, l, h, alpha)) for l in range(u - 1) for h in range(u))
            P = max(abs(explicit_P(u, N, h)(x)) for h in range(u))
            Q = max(abs(explicit_Q(u, N, l, h)(x)) for l in range(u - 1) for h in range(u))
            log_r.append(float(mpmath.log(R)))
            log_p.append(float(mpmath.log(P)))
            log_q.append(float(mpmath.log(Q)))
    with mpmath.workprec(prec):
        h_alpha = float(mpmath.log(abs(alpha)))
        log2 = float(mpmath.log(2))
    growth = u * (u - 1) * h_alpha + u * (u + 1) * log2
    fits = [
        _fit('remainder', Ns, log_r, -u * (h_alpha - log2), slack),
        _fit('P', Ns, log_p, growth, slack),
        _fit('Q', Ns, log_q, growth, slack),
    ]
    return DecayReport(u, alpha, PlaceQ(None), fits)


def _padic_remainder_valuation(u: int, N: int, l: int, h: int, alpha: Fraction, p: int,
                               max_terms: int = 10_000) -> int:
    """v_p(R_{uN,l,h}(alpha)) for p coprime to u and v_p(alpha) < 0.

    Terms are added until a lower bound on the valuation of every later term
    exceeds that of the partial sum. Only the Pochhammer symbol in the
    denominator can lower a valuation, by at most k/(p-1) + log_p(c + uk).
    """
    start = 1 if l < h else 0
    va = -valuation(alpha, p)
    head = valuation(pochhammer_ratio(Fraction(u - 1, u), Fraction(u + l, u), u * N), p)
    c = u + l + u * u * N
    total = Fraction(0)
    for k in range(start, start + max_terms):
        e = u * N + l - h + 1 + u * k
        total += remainder_term(u, N, l, h, k) / alpha**e
        if total == 0:
            continue
        lower = head + va * (e + u) - (k + 1) / (p - 1) - math.log(c + u * (k + 1), p)
        if lower > valuation(total, p):
            return valuation(total, p)
    raise PrecisionError(f'the {p}-adic valuation of the remainder at {alpha} did not settle')


def _padic(u: int, alpha: Fraction, p: int, Ns: Sequence[int], slack: float,
           prec: int) -> DecayReport:
    place = PlaceQ(p)
    if u % p == 0:
        raise HypothesisError(f'the {p}-adic remainder check needs p coprime to u = {u}')
    if valuation(alpha, p) >= 0:
        raise HypothesisError(f'the {p}-adic remainder estimate needs |alpha|_{p} > 1, got {alpha}')
    eps = 1
    log_r = []
    with mpmath.workprec(prec):
        for N in Ns:
            worst = max(-_padic_remainder_valuation(u, N, l, h, alpha, p)
                        for l in range(u - 1) for h in range(u))
            log_r.append(float(worst * mpmath.log(p)))
        bound = float(-u * (h_v(alpha, place) - eps * log_abs_v(p, place) / (p - 1)))
    return DecayReport(u, alpha, place, [_fit('remainder', Ns, log_r, bound, slack)])


def decay_check(u: int,
                alpha: RationalLike,
                Ns: Sequence[int],
                *,
                place: PlaceQ = PlaceQ(None),
                slack: Optional[float] = None,
                prec: int = 53) -> DecayReport:
    """Fitted slopes of log|R_{uN,l,h}(alpha)|_v (and of log|P|, log|Q| at infinity) over N."""
    alpha = to_rational(alpha)
    if len(Ns) < 2:
        raise ValueError('a slope needs at least two values of N')
    slack = 0.2 * u if slack is None else slack
    if place.is_infinite:
        report = _archimedean(u, alpha, Ns, slack, prec)
    else:
        report = _padic(u, alpha, place.p, Ns, slack, prec)
    for f in report.fits:
        log.info(f'{f.name}: slope {f.slope:.4f} against bound {f.bound:.4f} (+{f.slack})')
    return report
#endregion
