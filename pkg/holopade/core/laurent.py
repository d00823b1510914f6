"""Truncated Laurent series at infinity.

`LaurentTail` holds f_0 .. f_{T-1} of sum_k f_k / z^{k+1}, known modulo
O(1/z^{T+1}); precision None marks an exact (finitely supported) tail.
`LaurentPoly` is the pair (polynomial part, tail), which is exactly the
projection of K[z][[1/z]] onto K[z] and its complement.

Every operation stores the worst-case surviving precision; nothing here ever
extends a tail silently.
"""
import dataclasses
from fractions import Fraction
from typing import Iterable, Optional, Union

from ..errors import PrecisionError
from .numbers import RationalLike, format_rational, to_rational
from .poly import Poly


@dataclasses.dataclass(frozen=True)
class AtLeast:
    """ord_inf is at least `bound`; the stored coefficients cannot tell more."""
    bound: int

    def __str__(self) -> str:
        return f'>= {self.bound}'


class _Infinite:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return 'INFINITE'

    __str__ = __repr__


INFINITE = _Infinite()
Order = Union[int, AtLeast, _Infinite]


def _min_precision(*ps: Optional[int]) -> Optional[int]:
    finite = [p for p in ps if p is not None]
    return min(finite) if finite else None


class LaurentTail:
    __slots__ = ('coeffs', 'precision')

    def __init__(self, coeffs: Iterable[RationalLike], precision: Optional[int]):
        cs = [to_rational(c) for c in coeffs]
        if precision is None:
            while cs and cs[-1] == 0:
                cs.pop()
        else:
            if precision < 0:
                raise PrecisionError(f'negative precision {precision}')
            cs = (cs + [Fraction(0)] * precision)[:precision]
        self.coeffs: tuple[Fraction, ...] = tuple(cs)
        self.precision = precision

    @classmethod
    def exact(cls, coeffs: Iterable[RationalLike]) -> 'LaurentTail':
        return cls(coeffs, None)

    @classmethod
    def zero(cls) -> 'LaurentTail':
        return cls((), None)

    def is_exact(self) -> bool:
        return self.precision is None

    def coeff(self, k: int) -> Fraction:
        """Coefficient f_k of 1/z^{k+1}."""
        if k < len(self.coeffs):
            return self.coeffs[k]
        if self.precision is None or k < self.precision:
            return Fraction(0)
        raise PrecisionError(f'coefficient of 1/z^{k + 1} requested from a tail known to precision '
                             f'{self.precision}')

    def known(self) -> int:
        """Number of coefficients that can be read."""
        return len(self.coeffs) if self.precision is None else self.precision

    def truncate(self, precision: int) -> 'LaurentTail':
        if self.precision is not None and precision > self.precision:
            raise PrecisionError(f'cannot raise precision {self.precision} to {precision}')
        return LaurentTail(self.coeffs[:precision], precision)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentTail):
            return NotImplemented
        return self.precision == other.precision and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.coeffs, self.precision))

    def __neg__(self) -> 'LaurentTail':
        return LaurentTail([-c for c in self.coeffs], self.precision)

    def __add__(self, other: 'LaurentTail') -> 'LaurentTail':
        prec = _min_precision(self.precision, other.precision)
        n = prec if prec is not None else max(len(self.coeffs), len(other.coeffs))
        return LaurentTail([self.coeff(k) + other.coeff(k) for k in range(n)], prec)

    def __sub__(self, other: 'LaurentTail') -> 'LaurentTail':
        return self + (-other)

    def scale(self, c: RationalLike) -> 'LaurentTail':
        c = to_rational(c)
        return LaurentTail([c * x for x in self.coeffs], self.precision)

    def __mul__(self, other) -> Union['LaurentTail', 'LaurentPoly']:
        if isinstance(other, Poly):
            return LaurentPoly(Poly.zero(), self) * LaurentPoly.from_poly(other)
        if isinstance(other, LaurentPoly):
            return LaurentPoly(Poly.zero(), self) * other
        if not isinstance(other, LaurentTail):
            return self.scale(other)
        # h_k = sum_{i+j=k-1} f_i g_j; an unknown factor at precision T leaves T+1 known
        caps = [p + 1 for p in (self.precision, other.precision) if p is not None]
        prec = min(caps) if caps else None
        n = prec if prec is not None else len(self.coeffs) + len(other.coeffs)
        out = [Fraction(0)] * n
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if i + j + 1 >= n:
                    break
                out[i + j + 1] += a * b
        return LaurentTail(out, prec)

    __rmul__ = __mul__

    def derivative(self) -> 'LaurentTail':
        # d/dz f_k z^{-k-1} = -(k+1) f_k z^{-k-2}
        prec = None if self.precision is None else self.precision + 1
        cs = [Fraction(0)] + [-(k + 1) * c for k, c in enumerate(self.coeffs)]
        return LaurentTail(cs, prec)

    def to_json(self) -> dict:
        return {
            'precision': self.precision,
            'coefficients': [format_rational(c) for c in self.coeffs],
        }

    def leading_terms(self, count: int = 3) -> list[tuple[int, str]]:
        """First `count` nonzero coefficients as (power of 1/z, value)."""
        out = []
        for k, c in enumerate(self.coeffs):
            if c != 0:
                out.append((k + 1, format_rational(c)))
                if len(out) == count:
                    break
        return out

    def __repr__(self) -> str:
        shown = ', '.join(format_rational(c) for c in self.coeffs[:8])
        more = ', ...' if len(self.coeffs) > 8 else ''
        return f'LaurentTail([{shown}{more}], precision={self.precision})'


class LaurentPoly:
    """Element of K[z][[1/z]] split as poly_part + tail."""
    __slots__ = ('poly_part', 'tail')

    def __init__(self, poly_part: Poly, tail: LaurentTail):
        if poly_part.var != 'z' and not poly_part.is_constant():
            raise ValueError('Laurent series are taken in z')
        self.poly_part = poly_part.relabel('z')
        self.tail = tail

    @classmethod
    def from_poly(cls, p: Poly) -> 'LaurentPoly':
        return cls(p, LaurentTail.zero())

    @classmethod
    def from_tail(cls, t: LaurentTail) -> 'LaurentPoly':
        return cls(Poly.zero(), t)

    @property
    def precision(self) -> Optional[int]:
        return self.tail.precision

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.poly_part == other.poly_part and self.tail == other.tail

    def __hash__(self) -> int:
        return hash((self.poly_part, self.tail))

    def __neg__(self) -> 'LaurentPoly':
        return LaurentPoly(-self.poly_part, -self.tail)

    def __add__(self, other) -> 'LaurentPoly':
        other = _lift(other)
        return LaurentPoly(self.poly_part + other.poly_part, self.tail + other.tail)

    __radd__ = __add__

    def __sub__(self, other) -> 'LaurentPoly':
        return self + (-_lift(other))

    def __mul__(self, other) -> 'LaurentPoly':
        if not isinstance(other, (LaurentPoly, LaurentTail, Poly)):
            c = to_rational(other)
            return LaurentPoly(self.poly_part * c, self.tail.scale(c))
        other = _lift(other)
        poly = self.poly_part * other.poly_part
        a = _poly_times_tail(self.poly_part, other.tail)
        b = _poly_times_tail(other.poly_part, self.tail)
        c = self.tail * other.tail
        return LaurentPoly(poly + a.poly_part + b.poly_part, a.tail + b.tail + c)

    __rmul__ = __mul__

    def derivative(self) -> 'LaurentPoly':
        return LaurentPoly(self.poly_part.derivative(), self.tail.derivative())

    def to_json(self) -> dict:
        return {'poly_part': self.poly_part.to_json(), 'tail': self.tail.to_json()}

    def __repr__(self) -> str:
        return f'LaurentPoly({self.poly_part} + {self.tail!r})'


def _lift(x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, LaurentTail):
        return LaurentPoly.from_tail(x)
    if isinstance(x, Poly):
        return LaurentPoly.from_poly(x)
    return LaurentPoly.from_poly(Poly.constant(to_rational(x)))


def _poly_times_tail(p: Poly, f: LaurentTail) -> LaurentPoly:
    # p_m z^m * f_k z^{-k-1} lands on z^{m-k-1}
    if p.is_zero():
        return LaurentPoly(Poly.zero(), LaurentTail.zero())
    d = int(p.degree)
    if f.precision is not None and f.precision < d:
        raise PrecisionError(f'tail known to precision {f.precision} cannot be multiplied by a '
                             f'degree {d} polynomial')
    poly = [Fraction(0)] * d
    for m, c in enumerate(p.coeffs):
        for k in range(m):
            poly[m - k - 1] += c * f.coeff(k)
    prec = None if f.precision is None else f.precision - d
    n = prec if prec is not None else len(f.coeffs)
    tail = []
    for s in range(n):
        tail.append(sum((c * f.coeff(m + s) for m, c in enumerate(p.coeffs)), Fraction(0)))
    return LaurentPoly(Poly(poly, 'z'), LaurentTail(tail, prec))


def ord_inf(x: Union[LaurentPoly, LaurentTail]) -> Order:
    """Least k with a nonzero coefficient of 1/z^k.

    The polynomial part contributes -deg; a tail that is zero as far as it is
    known yields AtLeast(T+1), or INFINITE when the tail is exact.
    """
    if isinstance(x, LaurentPoly):
        if not x.poly_part.is_zero():
            return -int(x.poly_part.degree)
        x = x.tail
    for k, c in enumerate(x.coeffs):
        if c != 0:
            return k + 1
    if x.precision is None:
        return INFINITE
    return AtLeast(x.precision + 1)


def order_at_least(order: Order, bound: int) -> Optional[bool]:
    """Decide ord >= bound; None when the stored precision cannot tell."""
    if order is INFINITE:
        return True
    if isinstance(order, AtLeast):
        return True if order.bound >= bound else None
    return order >= bound


def order_to_json(order: Order):
    if order is INFINITE:
        return 'inf'
    if isinstance(order, AtLeast):
        return f'>={order.bound}'
    return order
