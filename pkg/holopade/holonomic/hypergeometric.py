from fractions import Fraction

from ..core.numbers import RationalLike, to_rational


def gauss_2f1_coefficients(a: RationalLike, b: RationalLike, c: RationalLike,
                           terms: int) -> list[Fraction]:
    """(a)_k (b)_k / ((c)_k k!) for k < terms."""
    a, b, c = to_rational(a), to_rational(b), to_rational(c)
    out = []
    term = Fraction(1)
    for k in range(terms):
        out.append(term)
        if c + k == 0:
            if k + 1 < terms:
                raise ValueError(f'(c)_{k + 1} vanishes for c = {c}')
            break
        term = term * (a + k) * (b + k) / ((c + k) * (k + 1))
    return out


def gauss_2f1_partial(a: RationalLike, b: RationalLike, c: RationalLike, x: RationalLike,
                      terms: int) -> Fraction:
    """Exact partial sum of 2F1(a, b; c | x) over k < terms."""
    x = to_rational(x)
    coeffs = gauss_2f1_coefficients(a, b, c, terms)
    return sum((t * x**k for k, t in enumerate(coeffs)), Fraction(0))


if __name__ == '__main__':
    assert gauss_2f1_partial(1, 1, 2, Fraction(1, 2), 4) * Fraction(1, 2) == Fraction(131, 192)
    assert gauss_2f1_partial(3, 4, 5, 0, 10) == 1
    print('Passed')
