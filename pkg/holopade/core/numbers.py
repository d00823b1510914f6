import math
from fractions import Fraction
from typing import Union

import mpmath

Rational = Fraction
RationalLike = Union[int, str, Fraction]


def to_rational(x: RationalLike) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError('booleans are not rationals')
    if isinstance(x, (int, str)):
        return Fraction(x)
    raise TypeError(f'cannot read {x!r} as an exact rational')


def format_rational(q: Fraction) -> str:
    # 'p/q', or 'p' when q == 1
    return str(Fraction(q))


def to_mpf(q: Fraction) -> mpmath.mpf:
    return mpmath.mpf(q.numerator) / q.denominator


def pochhammer(x: RationalLike, k: int) -> Fraction:
    """Rising factorial (x)_k = x (x+1) ... (x+k-1), with (x)_0 = 1."""
    assert k >= 0
    x = to_rational(x)
    out = Fraction(1)
    for i in range(k):
        out *= x + i
        if out == 0:
            break
    return out


def gen_binomial(a: RationalLike, b: int) -> Fraction:
    """binom(a, b) = (-1)^b (-a)_b / b! for rational a and integer b >= 0."""
    assert b >= 0
    a = to_rational(a)
    return (-1)**b * pochhammer(-a, b) / math.factorial(b)


def pochhammer_ratio(a: RationalLike, b: RationalLike, k: int) -> Fraction:
    """(a)_k / (b)_k, computed incrementally."""
    a, b = to_rational(a), to_rational(b)
    out = Fraction(1)
    for i in range(k):
        if b + i == 0:
            raise ZeroDivisionError(f'({b})_{k} vanishes at factor {i}')
        out *= (a + i) / (b + i)
    return out


def is_integer(q: Fraction) -> bool:
    return Fraction(q).denominator == 1


def is_negative_integer(q: Fraction) -> bool:
    return is_integer(q) and q < 0


if __name__ == '__main__':
    assert pochhammer(Fraction(1, 2), 3) == Fraction(15, 8)
    assert pochhammer(-2, 4) == 0
    assert gen_binomial(5, 2) == 10
    assert gen_binomial(Fraction(1, 2), 2) == Fraction(-1, 8)
    assert format_rational(Fraction(6, 3)) == '2'
    print('Passed')
