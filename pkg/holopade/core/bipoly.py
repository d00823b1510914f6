from fractions import Fraction
from typing import Iterable, Mapping, Union

from .numbers import RationalLike, format_rational, to_rational
from .poly import Poly


class BiPoly:
    """Polynomial in K[z, t] stored as {(i, j): c} for c z^i t^j, zeros never stored."""
    __slots__ = ('terms', )

    def __init__(self, terms: Union[Mapping[tuple[int, int], RationalLike],
                                    Iterable[tuple[tuple[int, int], RationalLike]]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[tuple[int, int], Fraction] = {}
        for (i, j), c in items:
            acc[(i, j)] = acc.get((i, j), Fraction(0)) + to_rational(c)
        self.terms: dict[tuple[int, int], Fraction] = {k: v for k, v in acc.items() if v != 0}

    @classmethod
    def from_poly(cls, p: Poly) -> 'BiPoly':
        if p.var == 'z':
            return cls({(k, 0): c for k, c in enumerate(p.coeffs)})
        return cls({(0, k): c for k, c in enumerate(p.coeffs)})

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def t_degree(self) -> int:
        return max((j for _, j in self.terms), default=-1)

    @property
    def z_degree(self) -> int:
        return max((i for i, _ in self.terms), default=-1)

    def coefficient_of_t(self, j: int) -> Poly:
        """The z-polynomial multiplying t^j."""
        deg = max((i for i, jj in self.terms if jj == j), default=-1)
        return Poly([self.terms.get((i, j), 0) for i in range(deg + 1)], 'z')

    def coefficient_of_z(self, i: int) -> Poly:
        """The t-polynomial multiplying z^i."""
        deg = max((j for ii, j in self.terms if ii == i), default=-1)
        return Poly([self.terms.get((i, j), 0) for j in range(deg + 1)], 't')

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            other = BiPoly.from_poly(other)
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __add__(self, other) -> 'BiPoly':
        if isinstance(other, Poly):
            other = BiPoly.from_poly(other)
        return BiPoly(list(self.terms.items()) + list(other.terms.items()))

    __radd__ = __add__

    def __neg__(self) -> 'BiPoly':
        return BiPoly({k: -v for k, v in self.terms.items()})

    def __sub__(self, other) -> 'BiPoly':
        if isinstance(other, Poly):
            other = BiPoly.from_poly(other)
        return self + (-other)

    def __mul__(self, other) -> 'BiPoly':
        if isinstance(other, Poly):
            other = BiPoly.from_poly(other)
        if not isinstance(other, BiPoly):
            c = to_rational(other)
            return BiPoly({k: c * v for k, v in self.terms.items()})
        out: list[tuple[tuple[int, int], Fraction]] = []
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                out.append(((i1 + i2, j1 + j2), c1 * c2))
        return BiPoly(out)

    __rmul__ = __mul__

    def evaluate_t(self, t0: RationalLike) -> Poly:
        """Specialize t = t0, leaving a polynomial in z."""
        t0 = to_rational(t0)
        deg = self.z_degree
        cs = [Fraction(0)] * (deg + 1)
        for (i, j), c in self.terms.items():
            cs[i] += c * t0**j
        return Poly(cs, 'z')

    def to_json(self) -> list[list]:
        return [[i, j, format_rational(c)] for (i, j), c in sorted(self.terms.items())]

    def __repr__(self) -> str:
        body = ' + '.join(f'{format_rational(c)}*z^{i}*t^{j}'
                          for (i, j), c in sorted(self.terms.items()))
        return f'BiPoly({body or "0"})'


def divided_difference(p: Poly) -> BiPoly:
    """(P(z) - P(t)) / (z - t) = sum_k p_k sum_{i+j=k-1} z^i t^j."""
    terms = []
    for k, c in enumerate(p.coeffs):
        for i in range(k):
            terms.append(((i, k - 1 - i), c))
    return BiPoly(terms)


if __name__ == '__main__':
    z = Poly.x()
    assert divided_difference(z**2) == BiPoly({(1, 0): 1, (0, 1): 1})
    assert divided_difference(Poly.constant(7)).is_zero()
    print('Passed')
