"""Dense univariate polynomials over Q.

A `Poly` is an immutable tuple of `Fraction` coefficients in ascending powers
plus the name of its indeterminate ('z' or 't'). The zero polynomial has no
stored coefficients and degree `DEG_ZERO` (minus infinity), so that
deg(p q) = deg p + deg q holds without special cases.
"""
from fractions import Fraction
from typing import Iterable, Sequence, Union

import mpmath
from sympy import Poly as SympyPoly
from sympy import Symbol
from sympy.parsing.sympy_parser import (convert_xor, implicit_multiplication_application,
                                        parse_expr, standard_transformations)

from .numbers import RationalLike, format_rational, to_mpf, to_rational

DEG_ZERO = float('-inf')
VARIABLES = ('z', 't')

_TRANSFORMS = standard_transformations + (implicit_multiplication_application, convert_xor)


class Poly:
    __slots__ = ('coeffs', 'var')

    def __init__(self, coeffs: Iterable[RationalLike] = (), var: str = 'z'):
        if var not in VARIABLES:
            raise ValueError(f'unknown indeterminate {var!r}; expected one of {VARIABLES}')
        cs = [to_rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)
        self.var = var

    #region constructors
    @classmethod
    def zero(cls, var: str = 'z') -> 'Poly':
        return cls((), var)

    @classmethod
    def constant(cls, c: RationalLike, var: str = 'z') -> 'Poly':
        return cls((c, ), var)

    @classmethod
    def monomial(cls, k: int, c: RationalLike = 1, var: str = 'z') -> 'Poly':
        assert k >= 0
        return cls([0] * k + [c], var)

    @classmethod
    def x(cls, var: str = 'z') -> 'Poly':
        return cls((0, 1), var)

    @classmethod
    def parse(cls, text: str, var: str = 'z') -> 'Poly':
        """Read strings such as '-2z', 'z^2-1' or '3*z**2 + 1/2'."""
        sym = Symbol(var)
        try:
            expr = parse_expr(str(text), local_dict={var: sym}, transformations=_TRANSFORMS)
            sp = SympyPoly(expr, sym)
        except Exception as e:
            raise ValueError(f'cannot parse {text!r} as a polynomial in {var}: {e}') from e
        coeffs = []
        for c in reversed(sp.all_coeffs()):
            if not c.is_Rational:
                raise ValueError(f'coefficient {c} of {text!r} is not rational')
            coeffs.append(Fraction(int(c.p), int(c.q)))
        return cls(coeffs, var)

    @classmethod
    def from_json(cls, data: Sequence[str], var: str = 'z') -> 'Poly':
        return cls([Fraction(s) for s in data], var)
    #endregion

    @property
    def degree(self) -> Union[int, float]:
        return len(self.coeffs) - 1 if self.coeffs else DEG_ZERO

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def coeff(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def _lift(self, other) -> 'Poly':
        if isinstance(other, Poly):
            if other.var != self.var and not (other.is_constant() or self.is_constant()):
                raise ValueError(f'indeterminate mismatch: {self.var} vs {other.var}')
            return other
        return Poly.constant(to_rational(other), self.var)

    def _var_with(self, other: 'Poly') -> str:
        # constants adopt the indeterminate of their partner
        return other.var if self.is_constant() and not other.is_constant() else self.var

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            if self.is_constant() and other.is_constant():
                return self.coeffs == other.coeffs
            return self.var == other.var and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly.constant(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.var if not self.is_constant() else '', self.coeffs))

    def __neg__(self) -> 'Poly':
        return Poly([-c for c in self.coeffs], self.var)

    def __add__(self, other) -> 'Poly':
        if not isinstance(other, (int, Fraction, Poly)):
            return NotImplemented
        other = self._lift(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly([self.coeff(i) + other.coeff(i) for i in range(n)], self._var_with(other))

    __radd__ = __add__

    def __sub__(self, other) -> 'Poly':
        return self + (-self._lift(other))

    def __rsub__(self, other) -> 'Poly':
        return self._lift(other) - self

    def __mul__(self, other) -> 'Poly':
        if not isinstance(other, (int, Fraction, Poly)):
            return NotImplemented
        if not isinstance(other, Poly):
            c = to_rational(other)
            return Poly([c * x for x in self.coeffs], self.var)
        other = self._lift(other)
        if self.is_zero() or other.is_zero():
            return Poly.zero(self._var_with(other))
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out, self._var_with(other))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> 'Poly':
        assert k >= 0
        out, base = Poly.constant(1, self.var), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __divmod__(self, other) -> tuple['Poly', 'Poly']:
        other = self._lift(other)
        if other.is_zero():
            raise ZeroDivisionError('polynomial division by zero')
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs) + 1
        if dq <= 0:
            return Poly.zero(self.var), Poly(rem, self.var)
        quo = [Fraction(0)] * dq
        lead = other.leading
        for k in range(dq - 1, -1, -1):
            c = rem[k + len(other.coeffs) - 1] / lead
            quo[k] = c
            if c:
                for i, b in enumerate(other.coeffs):
                    rem[k + i] -= c * b
        return Poly(quo, self.var), Poly(rem[:len(other.coeffs) - 1], self.var)

    def __floordiv__(self, other) -> 'Poly':
        return divmod(self, other)[0]

    def __mod__(self, other) -> 'Poly':
        return divmod(self, other)[1]

    def exact_div(self, other) -> 'Poly':
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ValueError(f'{other} does not divide {self}')
        return q

    def divides(self, other: 'Poly') -> bool:
        """True iff self divides other."""
        return (other % self).is_zero()

    def monic(self) -> 'Poly':
        if self.is_zero():
            return self
        return self * (1 / self.leading)

    def gcd(self, other: 'Poly') -> 'Poly':
        a, b = self, self._lift(other)
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def derivative(self, k: int = 1) -> 'Poly':
        cs = self.coeffs
        for _ in range(k):
            cs = tuple(i * c for i, c in enumerate(cs))[1:]
        return Poly(cs, self.var)

    def __call__(self, x):
        """Horner evaluation at a Fraction, int, Poly or mpmath number."""
        lift = to_mpf if isinstance(x, (mpmath.mpf, mpmath.mpc)) else (lambda c: c)
        out = 0 * x
        for c in reversed(self.coeffs):
            out = out * x + lift(c)
        return out

    def compose(self, other: 'Poly') -> 'Poly':
        out = Poly.zero(other.var)
        for c in reversed(self.coeffs):
            out = out * other + c
        return out

    def relabel(self, var: str) -> 'Poly':
        return Poly(self.coeffs, var)

    def to_json(self) -> list[str]:
        return [format_rational(c) for c in self.coeffs]

    def __repr__(self) -> str:
        return f'Poly({self}, var={self.var!r})'

    def __str__(self) -> str:
        if self.is_zero():
            return '0'
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mono = '' if k == 0 else (self.var if k == 1 else f'{self.var}^{k}')
            if mono and abs(c) == 1:
                body = mono
            else:
                body = f'{format_rational(abs(c))}{"*" + mono if mono else ""}'
            terms.append(('-' if c < 0 else '+', body))
        sign, body = terms[0]
        out = ('-' if sign == '-' else '') + body
        for sign, body in terms[1:]:
            out += f' {sign} {body}'
        return out


def product(polys: Iterable[Poly], var: str = 'z') -> Poly:
    out = Poly.constant(1, var)
    for p in polys:
        out = out * p
    return out


if __name__ == '__main__':
    z = Poly.x()
    assert (z**2 - 1).degree == 2
    assert Poly.zero().degree == DEG_ZERO
    assert divmod(z**3 - 2 * z, z - 1) == (z**2 + z - 1, Poly.constant(-1))
    assert Poly.parse('-2z') == -2 * z
    assert Poly.parse('z^2-1') == z**2 - 1
    assert (z**2 - 1).gcd(z**2 + 2 * z + 1) == z + 1
    print('Passed')
