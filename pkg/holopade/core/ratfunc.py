from fractions import Fraction
from typing import TYPE_CHECKING, Union

from .numbers import RationalLike, to_rational
from .poly import Poly

if TYPE_CHECKING:
    from .laurent import LaurentPoly


class RatFunc:
    """Reduced fraction num/den of polynomials with den monic."""
    __slots__ = ('num', 'den')

    def __init__(self, num: Union[Poly, RationalLike], den: Union[Poly, RationalLike, None] = None):
        if not isinstance(num, Poly):
            num = Poly.constant(to_rational(num))
        if den is None:
            den = Poly.constant(1, num.var)
        elif not isinstance(den, Poly):
            den = Poly.constant(to_rational(den), num.var)
        if den.is_zero():
            raise ZeroDivisionError('rational function with zero denominator')
        var = num.var if not num.is_constant() else den.var
        if den.is_constant():
            num = num * (1 / den.leading)
            den = Poly.constant(1, var)
        elif num.is_zero():
            den = Poly.constant(1, var)
        else:
            g = num.gcd(den)
            if not g.is_constant():
                num, den = num.exact_div(g), den.exact_div(g)
            lead = den.leading
            num, den = num * (1 / lead), den * (1 / lead)
        self.num = num.relabel(var)
        self.den = den.relabel(var)

    @classmethod
    def lift(cls, x) -> 'RatFunc':
        if isinstance(x, RatFunc):
            return x
        return cls(x)

    @property
    def var(self) -> str:
        return self.num.var

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def as_poly(self) -> Poly:
        if not self.is_polynomial():
            raise ValueError(f'{self} is not a polynomial')
        return self.num

    def relabel(self, var: str) -> 'RatFunc':
        return RatFunc(self.num.relabel(var), self.den.relabel(var))

    def __eq__(self, other) -> bool:
        if isinstance(other, (Poly, int, Fraction)):
            other = RatFunc(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __neg__(self) -> 'RatFunc':
        return RatFunc(-self.num, self.den)

    def __add__(self, other) -> 'RatFunc':
        other = RatFunc.lift(other)
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other) -> 'RatFunc':
        return self + (-RatFunc.lift(other))

    def __rsub__(self, other) -> 'RatFunc':
        return RatFunc.lift(other) - self

    def __mul__(self, other) -> 'RatFunc':
        other = RatFunc.lift(other)
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> 'RatFunc':
        other = RatFunc.lift(other)
        if other.is_zero():
            raise ZeroDivisionError('division by the zero rational function')
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other) -> 'RatFunc':
        return RatFunc.lift(other) / self

    def __pow__(self, k: int) -> 'RatFunc':
        if k < 0:
            return RatFunc(self.den**(-k), self.num**(-k))
        return RatFunc(self.num**k, self.den**k)

    def derivative(self, k: int = 1) -> 'RatFunc':
        out = self
        for _ in range(k):
            if out.is_polynomial():
                out = RatFunc(out.num.derivative())
            else:
                out = RatFunc(out.num.derivative() * out.den - out.num * out.den.derivative(),
                              out.den * out.den)
        return out

    def __call__(self, x):
        return self.num(x) / self.den(x)

    def expand_at_infinity(self, precision: int) -> 'LaurentPoly':
        """Polynomial part exactly, plus the first `precision` tail coefficients."""
        from .laurent import LaurentPoly, LaurentTail
        q, r = divmod(self.num, self.den)
        q = q.relabel('z')
        if r.is_zero():
            return LaurentPoly(q, LaurentTail.exact(()))
        # den is monic of degree e; r/den = sum_s g_s / z^{s+1}
        d, e = self.den.coeffs, len(self.den.coeffs) - 1
        g: list[Fraction] = []
        for s in range(precision):
            acc = r.coeff(e - 1 - s)
            for i in range(e):
                idx = s - (e - i)
                if idx >= 0:
                    acc -= d[i] * g[idx]
            g.append(acc)
        return LaurentPoly(q, LaurentTail(g, precision))

    def to_json(self) -> dict:
        return {'num': self.num.to_json(), 'den': self.den.to_json()}

    def __repr__(self) -> str:
        if self.is_polynomial():
            return f'RatFunc({self.num})'
        return f'RatFunc(({self.num}) / ({self.den}))'
