"""Differential operators sum_i c_i(x) d^i with rational-function coefficients.

Operators are kept in the normal form with every derivative on the right, so
equality is coefficient-wise equality.
"""
import math
from fractions import Fraction
from typing import Iterable, Sequence, Union

from ..core.laurent import LaurentPoly, LaurentTail
from ..core.numbers import RationalLike, to_rational
from ..core.poly import Poly
from ..core.ratfunc import RatFunc
from ..errors import PrecisionError

Coefficient = Union[RatFunc, Poly, int, Fraction]


class DiffOp:
    __slots__ = ('coeffs', 'var')

    def __init__(self, coeffs: Iterable[Coefficient], var: str = 'z'):
        cs = [_as_ratfunc(c, var) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        self.coeffs: tuple[RatFunc, ...] = tuple(cs)
        self.var = var

    #region constructors
    @classmethod
    def zero(cls, var: str = 'z') -> 'DiffOp':
        return cls((), var)

    @classmethod
    def identity(cls, var: str = 'z') -> 'DiffOp':
        return cls((1, ), var)

    @classmethod
    def d(cls, var: str = 'z') -> 'DiffOp':
        return cls((0, 1), var)

    @classmethod
    def multiplication(cls, c: Coefficient, var: str = 'z') -> 'DiffOp':
        return cls((c, ), var)

    @classmethod
    def first_order(cls, a: Poly, b: Poly) -> 'DiffOp':
        """D = -a(x) d + b(x)."""
        return cls((b, -a), a.var if not a.is_constant() else b.var)
    #endregion

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def has_polynomial_coefficients(self) -> bool:
        return all(c.is_polynomial() for c in self.coeffs)

    def coeff(self, i: int) -> RatFunc:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return RatFunc(Poly.zero(self.var))

    def relabel(self, var: str) -> 'DiffOp':
        return DiffOp([c.relabel(var) for c in self.coeffs], var)

    def __eq__(self, other) -> bool:
        if not isinstance(other, DiffOp):
            return NotImplemented
        if self.is_zero() and other.is_zero():
            return True
        return self.var == other.var and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.var, self.coeffs))

    def _check_var(self, other: 'DiffOp'):
        if self.var != other.var:
            raise ValueError(f'operators in {self.var} and {other.var} cannot be combined')

    def __add__(self, other: 'DiffOp') -> 'DiffOp':
        if not isinstance(other, DiffOp):
            other = DiffOp.multiplication(other, self.var)
        self._check_var(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return DiffOp([self.coeff(i) + other.coeff(i) for i in range(n)], self.var)

    __radd__ = __add__

    def __neg__(self) -> 'DiffOp':
        return DiffOp([-c for c in self.coeffs], self.var)

    def __sub__(self, other: 'DiffOp') -> 'DiffOp':
        if not isinstance(other, DiffOp):
            other = DiffOp.multiplication(other, self.var)
        return self + (-other)

    def scale(self, c: RationalLike) -> 'DiffOp':
        c = to_rational(c)
        return DiffOp([x * c for x in self.coeffs], self.var)

    def __matmul__(self, other: 'DiffOp') -> 'DiffOp':
        return compose(self, other)

    def __pow__(self, k: int) -> 'DiffOp':
        out = DiffOp.identity(self.var)
        for _ in range(k):
            out = compose(out, self)
        return out

    def __call__(self, f):
        return apply(self, f)

    def to_json(self) -> list:
        return [[i, c.to_json()] for i, c in enumerate(self.coeffs) if not c.is_zero()]

    def __repr__(self) -> str:
        terms = [f'({c!r})*d^{i}' for i, c in enumerate(self.coeffs) if not c.is_zero()]
        return f'DiffOp[{self.var}](' + ' + '.join(terms or ['0']) + ')'


def _as_ratfunc(c: Coefficient, var: str) -> RatFunc:
    if isinstance(c, RatFunc):
        return c if c.var == var else c.relabel(var)
    if isinstance(c, Poly):
        return RatFunc(c.relabel(var))
    return RatFunc(Poly.constant(to_rational(c), var))


def compose(D: DiffOp, E: DiffOp) -> DiffOp:
    """Normal form of D E, via d^i e = sum_s binom(i, s) e^(s) d^(i-s)."""
    D._check_var(E)
    if D.is_zero() or E.is_zero():
        return DiffOp.zero(D.var)
    derivs = [[e] for e in E.coeffs]
    for row in derivs:
        for _ in range(D.order):
            row.append(row[-1].derivative())
    out: dict[int, RatFunc] = {}
    for i, c in enumerate(D.coeffs):
        if c.is_zero():
            continue
        for j in range(len(E.coeffs)):
            for s in range(i + 1):
                e = derivs[j][s]
                if e.is_zero():
                    continue
                k = i - s + j
                term = c * e * math.comb(i, s)
                out[k] = out[k] + term if k in out else term
    order = max(out) if out else -1
    zero = RatFunc(Poly.zero(D.var))
    return DiffOp([out.get(k, zero) for k in range(order + 1)], D.var)


def commutator(D: DiffOp, E: DiffOp) -> DiffOp:
    return compose(D, E) - compose(E, D)


def apply(D: DiffOp, f: Union[Poly, RatFunc, LaurentPoly, LaurentTail]):
    """Exact image D . f.

    Polynomials map to polynomials whenever the image is one, otherwise to a
    RatFunc. Laurent inputs keep exact precision bookkeeping and require the
    tail precision to exceed the order of D.
    """
    if isinstance(f, LaurentTail):
        f = LaurentPoly.from_tail(f)
    if isinstance(f, LaurentPoly):
        return _apply_laurent(D, f)
    if isinstance(f, Poly):
        out = _apply_rational(D, RatFunc(f.relabel(D.var)))
        return out.num if out.is_polynomial() else out
    return _apply_rational(D, f)


def _apply_rational(D: DiffOp, f: RatFunc) -> RatFunc:
    out = RatFunc(Poly.zero(D.var))
    g = f
    for i, c in enumerate(D.coeffs):
        if i:
            g = g.derivative()
        if not c.is_zero():
            out = out + c * g
    return out


def _apply_laurent(D: DiffOp, f: LaurentPoly) -> LaurentPoly:
    if D.var != 'z':
        raise ValueError('Laurent series are expanded in z')
    T = f.precision
    if T is not None and T <= D.order:
        raise PrecisionError(f'tail precision {T} does not exceed the operator order {D.order}')
    # coefficients are expanded far enough never to be the precision bottleneck
    spare = (T if T is not None else 32) + D.order + int(max(f.poly_part.degree, 0)) + 2
    out = LaurentPoly(Poly.zero(), LaurentTail.zero())
    g = f
    for i, c in enumerate(D.coeffs):
        if i:
            g = g.derivative()
        if c.is_zero():
            continue
        out = out + c.expand_at_infinity(spare) * g
    return out


def adjoint(D: DiffOp) -> DiffOp:
    """sum_j P_j(z) d_z^j  |->  sum_j (-1)^j d_t^j P_j(t), in the other variable."""
    if not D.has_polynomial_coefficients():
        raise ValueError('the adjoint is defined on operators with polynomial coefficients')
    target = 't' if D.var == 'z' else 'z'
    out = DiffOp.zero(target)
    dt = DiffOp.d(target)
    for j, c in enumerate(D.coeffs):
        if c.is_zero():
            continue
        term = compose(dt**j, DiffOp.multiplication(c.num.relabel(target), target))
        out = out + (term if j % 2 == 0 else -term)
    return out


def from_polys(polys: Sequence[Poly], var: str = 'z') -> DiffOp:
    return DiffOp([RatFunc(p.relabel(var)) for p in polys], var)
