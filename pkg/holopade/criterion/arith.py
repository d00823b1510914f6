"""Arithmetic constants: nu(u), den, mu_n, and the threshold on log|alpha|.

Sign-critical quantities are also available as mpmath intervals so that a
rounded decimal can be certified.
"""
import contextlib
import dataclasses
import math
from fractions import Fraction
from typing import Iterable, Sequence

import mpmath
import sympy

from ..core.numbers import RationalLike, to_rational
from ..errors import HypothesisError, PrecisionError

THRESHOLD_RANGE = range(2, 16)


def euler_phi(n: int) -> int:
    return int(sympy.totient(n))


def prime_divisors(n: int) -> list[int]:
    return [int(q) for q in sympy.primefactors(n)]


#region nu, den, mu
def log_nu(u: int, *, ctx=mpmath.mp):
    """log nu(u) = log u + sum_{q | u} log q / (q - 1); `ctx` may be mpmath.iv."""
    if u < 2:
        raise ValueError(f'nu(u) needs u >= 2, got {u}')
    out = ctx.log(u)
    for q in prime_divisors(u):
        out += ctx.log(q) / (q - 1)
    return out


def nu(u: int) -> mpmath.mpf:
    return mpmath.exp(log_nu(u))


def nu_exact(u: int) -> sympy.Expr:
    """nu(u) as a sympy expression, u * prod q^{1/(q-1)}."""
    out = sympy.Integer(u)
    for q in prime_divisors(u):
        out *= sympy.Integer(q)**sympy.Rational(1, q - 1)
    return out


def den(values: Iterable[RationalLike]) -> int:
    """Least n >= 1 with n s integral for every s."""
    out = 1
    for s in values:
        out = math.lcm(out, to_rational(s).denominator)
    return out


def mu_n(a: RationalLike, n: int) -> int:
    """den(a)^n prod_{q | den(a)} q^{floor(n / (q - 1))}."""
    assert n >= 0
    d = to_rational(a).denominator
    out = d**n
    for q in prime_divisors(d):
        out *= q**(n // (q - 1))
    return out


def log_mu_const(a: RationalLike) -> mpmath.mpf:
    """log mu(a) = log den(a) + sum_{q | den(a)} log q / (q - 1)."""
    d = to_rational(a).denominator
    out = mpmath.log(d)
    for q in prime_divisors(d):
        out += mpmath.log(q) / (q - 1)
    return out


def mu_const(a: RationalLike) -> mpmath.mpf:
    return mpmath.exp(log_mu_const(a))
#endregion


#region V(alpha) and the table
def threshold_value(u: int, *, ctx=mpmath.mp):
    """(2 - 1/u) log nu(u) + (u - 1) / phi(u) + log 2: V(alpha) > 0 iff log|alpha| exceeds it."""
    return (2 - ctx.mpf(1) / u) * log_nu(u, ctx=ctx) + ctx.mpf(u - 1) / euler_phi(u) + ctx.log(2)


def V_alpha(u: int, alpha: RationalLike) -> mpmath.mpf:
    alpha = to_rational(alpha)
    if u < 2:
        raise HypothesisError(f'V(alpha) needs u >= 2, got {u}')
    if alpha.denominator != 1 or abs(alpha) < 2:
        raise HypothesisError(f'V(alpha) needs an integer alpha with |alpha| >= 2, got {alpha}')
    return mpmath.log(abs(alpha)) - threshold_value(u)


@dataclasses.dataclass(frozen=True)
class ThresholdRow:
    u: int
    cents: int
    value: mpmath.mpf

    @property
    def text(self) -> str:
        return f'{self.cents // 100}.{self.cents % 100:02d}'

    def to_json(self, digits: int = 15) -> dict:
        return {'u': self.u, 'threshold': self.text, 'value': mpmath.nstr(self.value, digits)}


@contextlib.contextmanager
def interval_precision(prec: int):
    saved = mpmath.iv.prec
    mpmath.iv.prec = prec
    try:
        yield mpmath.iv
    finally:
        mpmath.iv.prec = saved


def interval_bounds(x) -> tuple[mpmath.mpf, mpmath.mpf]:
    lo, hi = x._mpi_
    return mpmath.mpf(lo), mpmath.mpf(hi)


def threshold_cents(u: int, *, prec: int = 64) -> int:
    """100 times the threshold, rounded up, certified by interval evaluation."""
    with interval_precision(prec) as iv:
        x = 100 * threshold_value(u, ctx=iv)
        with mpmath.workprec(prec):
            lo, hi = (int(mpmath.ceil(e)) for e in interval_bounds(x))
    if lo != hi:
        raise PrecisionError(f'u = {u}: {prec} bits do not decide the rounding of {x}')
    return int(lo)


def threshold_table(us: Sequence[int] = THRESHOLD_RANGE, *, prec: int = 64) -> list[ThresholdRow]:
    rows = []
    for u in us:
        with mpmath.workprec(prec):
            value = threshold_value(u)
        rows.append(ThresholdRow(u, threshold_cents(u, prec=prec), value))
    return rows


def render_table_markdown(rows: Sequence[ThresholdRow]) -> str:
    lines = ['Minimal log(alpha) with V(alpha) > 0', '', '| u | log(alpha) > |', '|---:|---:|']
    lines += [f'| {r.u} | {r.text} |' for r in rows]
    return '\n'.join(lines) + '\n'


def render_table_json(rows: Sequence[ThresholdRow], digits: int = 15) -> dict:
    return {'rows': [r.to_json(digits) for r in rows]}
#endregion


def parse_u_range(text: str) -> list[int]:
    """'2..15', '3' or '2,5,7'."""
    text = text.strip()
    if '..' in text:
        lo, hi = text.split('..')
        return list(range(int(lo), int(hi) + 1))
    return [int(x) for x in text.split(',')]


if __name__ == '__main__':
    assert den([Fraction(1, 2), Fraction(1, 3)]) == 6
    assert mu_n(Fraction(1, 2), 2) == 16
    assert [r.text for r in threshold_table([2, 7, 12])] == ['3.78', '5.91', '10.59']
    print('Passed')
