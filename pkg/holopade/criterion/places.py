"""Places of Q, normalized absolute values and logarithmic heights.

Reals are mpmath numbers at the ambient mpmath precision; callers pick the
precision with `mpmath.workprec`.
"""
import dataclasses
from fractions import Fraction
from typing import Iterable, Optional, Sequence

import mpmath
import sympy

from ..core.numbers import RationalLike, to_rational


@dataclasses.dataclass(frozen=True)
class PlaceQ:
    """The archimedean place (p is None) or the p-adic place."""
    p: Optional[int] = None

    def __post_init__(self):
        if self.p is not None and not sympy.isprime(self.p):
            raise ValueError(f'{self.p} is not a prime')

    @property
    def is_infinite(self) -> bool:
        return self.p is None

    @classmethod
    def parse(cls, text: str) -> 'PlaceQ':
        text = str(text).strip().lower()
        if text in ('inf', 'infinity', 'oo'):
            return cls(None)
        if text.startswith('('):
            # prime ideals such as (2, 1+i) name places of a number field
            raise NotImplementedError(f'only places of Q are supported, got {text!r}')
        if not text.isdigit():
            raise ValueError(f'a place is "inf" or a prime, got {text!r}')
        return cls(int(text))

    def to_json(self) -> str:
        return 'inf' if self.p is None else str(self.p)

    def __str__(self) -> str:
        return 'inf' if self.p is None else f'p={self.p}'


INFINITE_PLACE = PlaceQ(None)


def valuation(x: RationalLike, p: int) -> int:
    x = to_rational(x)
    if x == 0:
        raise ValueError('the valuation of 0 is infinite')
    return sympy.multiplicity(p, abs(x.numerator)) - sympy.multiplicity(p, x.denominator)


def abs_v(x: RationalLike, v: PlaceQ) -> Fraction:
    """|x|_v, with |p|_p = 1/p."""
    x = to_rational(x)
    if v.is_infinite:
        return abs(x)
    if x == 0:
        return Fraction(0)
    return Fraction(v.p)**(-valuation(x, v.p))


def log_abs_v(x: RationalLike, v: PlaceQ) -> mpmath.mpf:
    x = to_rational(x)
    if x == 0:
        raise ValueError('log |0| is -infinity')
    if v.is_infinite:
        return mpmath.log(abs(x.numerator)) - mpmath.log(x.denominator)
    return -valuation(x, v.p) * mpmath.log(v.p)


def places_of(values: Iterable[RationalLike]) -> list[PlaceQ]:
    """The archimedean place and every prime dividing a numerator or a denominator."""
    primes = set()
    for x in values:
        x = to_rational(x)
        if x != 0:
            primes.update(sympy.primefactors(abs(x.numerator)))
            primes.update(sympy.primefactors(x.denominator))
    return [INFINITE_PLACE] + [PlaceQ(p) for p in sorted(primes)]


def h_v(beta: RationalLike, v: PlaceQ) -> mpmath.mpf:
    """log max(1, |beta|_v)."""
    beta = to_rational(beta)
    if beta == 0 or abs_v(beta, v) <= 1:
        return mpmath.mpf(0)
    return log_abs_v(beta, v)


def height(beta: RationalLike) -> mpmath.mpf:
    """log max(|p|, |q|) for beta = p/q in lowest terms."""
    beta = to_rational(beta)
    return mpmath.log(max(abs(beta.numerator), beta.denominator))


def projective_height(values: Sequence[RationalLike]) -> mpmath.mpf:
    """Height of the point (x_0 : ... : x_m), summing log of the sup norm over all places."""
    xs = [to_rational(x) for x in values]
    if all(x == 0 for x in xs):
        raise ValueError('the zero vector is not a projective point')
    total = mpmath.mpf(0)
    for v in places_of(xs):
        total += max(log_abs_v(x, v) for x in xs if x != 0)
    return total


def height_decomposition(beta: RationalLike) -> dict[str, mpmath.mpf]:
    """h_v(beta) over the places where it can be nonzero."""
    return {v.to_json(): h_v(beta, v) for v in places_of([beta])}


if __name__ == '__main__':
    assert abs_v(Fraction(3, 4), PlaceQ(2)) == 4
    assert valuation(Fraction(12, 5), 2) == 2
    assert abs(sum(height_decomposition(Fraction(3, 4)).values()) - height(Fraction(3, 4))) < 1e-12
    assert abs(projective_height([1, Fraction(3, 4)]) - height(Fraction(3, 4))) < 1e-12
    print('Passed')
