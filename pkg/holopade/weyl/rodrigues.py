"""First-order operators D = -a(z) d + b(z) and their weighted Rodrigues operators.

R_{D,n,r} = (1/n!) (d + b/a)^n a^n prod_v a_v^{-r_v}, where a = a_1 ... a_l.
"""
import dataclasses
import logging
import math
from fractions import Fraction
from typing import Optional, Sequence

from sympy import Rational, Symbol, factor_list

from ..core.poly import DEG_ZERO, Poly, product
from ..core.ratfunc import RatFunc
from ..errors import HypothesisError
from .diffop import DiffOp, compose

log = logging.getLogger()


@dataclasses.dataclass(frozen=True)
class FirstOrderData:
    a_factors: tuple[Poly, ...]
    b: Poly

    def __post_init__(self):
        if not self.a_factors:
            raise ValueError('a needs at least one factor')
        if any(p.is_zero() for p in self.a_factors):
            raise ValueError('every factor a_v must be nonzero')
        object.__setattr__(self, 'a_factors', tuple(p.relabel('z') for p in self.a_factors))
        object.__setattr__(self, 'b', self.b.relabel('z'))

    @classmethod
    def from_polys(cls, a: Poly, b: Poly) -> 'FirstOrderData':
        return cls((a, ), b)

    @property
    def a(self) -> Poly:
        return product(self.a_factors)

    @property
    def u(self) -> int:
        return int(self.a.degree)

    @property
    def v(self):
        # DEG_ZERO when b = 0
        return self.b.degree if not self.b.is_zero() else DEG_ZERO

    @property
    def w(self) -> int:
        return int(max(self.u - 2, self.v - 1))

    @property
    def operator(self) -> DiffOp:
        return DiffOp.first_order(self.a, self.b)

    def to_json(self) -> dict:
        return {'a_factors': [p.to_json() for p in self.a_factors], 'b': self.b.to_json()}


def euler_operator(a: Poly, b: Poly, var: str = 'z') -> DiffOp:
    """E_{a,b} = d + b/a."""
    return DiffOp((RatFunc(b.relabel(var), a.relabel(var)), 1), var)


def _weight_multiplier(F: FirstOrderData, n: int, r: Sequence[int], var: str) -> RatFunc:
    if len(r) != len(F.a_factors):
        raise ValueError(f'{len(r)} weights given for {len(F.a_factors)} factors of a')
    if any(x < 0 for x in r):
        raise ValueError(f'weights must be nonnegative, got {tuple(r)}')
    num = product((p.relabel(var)**n for p in F.a_factors), var)
    den = product((p.relabel(var)**x for p, x in zip(F.a_factors, r)), var)
    return RatFunc(num, den)


def rodrigues_op(F: FirstOrderData,
                 n: int,
                 r: Optional[Sequence[int]] = None,
                 var: str = 'z') -> DiffOp:
    """The weighted Rodrigues operator, built by n compositions."""
    assert n >= 0
    r = tuple(r) if r is not None else (0, ) * len(F.a_factors)
    E = euler_operator(F.a, F.b, var)
    op = compose(E**n, DiffOp.multiplication(_weight_multiplier(F, n, r, var), var))
    return op.scale(Fraction(1, math.factorial(n)))


def rodrigues_apply(F: FirstOrderData, n: int, r: Optional[Sequence[int]], G: Poly) -> Poly:
    """R_{D,n,r} . G for G in the ideal (prod_v a_v^{r_v}), by n first-order steps.

    With H = G / prod a_v^{r_v}, (d + b/a)(a^k H) = a^{k-1} (k a' H + a H' + b H).
    """
    r = tuple(r) if r is not None else (0, ) * len(F.a_factors)
    _weight_multiplier(F, n, r, 'z')
    G = G.relabel('z')
    gen = product(p**x for p, x in zip(F.a_factors, r))
    if not in_ideal(G, gen):
        raise HypothesisError(f'{G} is not in the ideal generated by {gen}')
    H = G.exact_div(gen)
    a, b = F.a, F.b
    da = a.derivative()
    for k in range(n, 0, -1):
        H = k * da * H + a * H.derivative() + b * H
    return H * Fraction(1, math.factorial(n))


def in_ideal(p: Poly, generator: Poly) -> bool:
    if generator.is_zero():
        return p.is_zero()
    return generator.divides(p)


#region commutativity
def scaled_euler_power(a: Poly, b: Poly, c: Poly, n: int, var: str = 'z') -> DiffOp:
    """(1/n!) (d + b/a)^n c^n."""
    E = euler_operator(a, b, var)
    op = compose(E**n, DiffOp.multiplication(c.relabel(var)**n, var))
    return op.scale(Fraction(1, math.factorial(n)))


def decompose_product(a: Poly, b: Poly, c: Poly, n: int, var: str = 'z') -> DiffOp:
    """(1/n!) R_1 (R_1 + c') ... (R_1 + (n-1) c') with R_1 = (d + b/a) c."""
    R1 = scaled_euler_power(a, b, c, 1, var)
    dc = DiffOp.multiplication(c.relabel(var).derivative(), var)
    out = DiffOp.identity(var)
    for k in range(n):
        out = compose(out, R1 + dc.scale(k))
    return out.scale(Fraction(1, math.factorial(n)))


def commute_criterion(a: Poly, b1: Poly, b2: Poly, c: Poly) -> bool:
    """True iff (b2 - b1) c / a is a constant.

    For deg c <= 1 this decides whether (1/n!)(d + b_j/a)^n c^n, j = 1, 2,
    commute for every pair of orders.
    """
    if c.degree > 1:
        raise HypothesisError(f'the commutativity criterion needs deg c <= 1, '
                              f'got deg {c} = {c.degree}')
    if a.is_zero() or c.is_zero():
        raise HypothesisError('the commutativity criterion needs a c != 0')
    q = RatFunc((b2 - b1) * c, a)
    return q.is_polynomial() and q.num.is_constant()


def satisfying_factorizations(a: Poly, b1: Poly, b2: Poly) -> list[tuple[Poly, Poly]]:
    """Splittings a = a_1 a_2, a_1 = 1 or monic linear, for which the criterion holds at c = a_1."""
    z = Symbol(a.var)
    candidates = [Poly.constant(1, a.var)]
    expr = sum(Rational(c.numerator, c.denominator) * z**k for k, c in enumerate(a.coeffs))
    _, factors = factor_list(expr, z)
    for f, _ in factors:
        lin = Poly.parse(str(f), a.var)
        if lin.degree == 1:
            lin = lin.monic()
            if lin not in candidates:
                candidates.append(lin)
    out = []
    for a1 in candidates:
        if commute_criterion(a, b1, b2, a1):
            out.append((a1, a.exact_div(a1)))
    log.debug(f'{len(out)} of {len(candidates)} splittings of {a} satisfy the criterion')
    return out


def commutes_directly(R1: DiffOp, R2: DiffOp) -> bool:
    return compose(R1, R2) == compose(R2, R1)
#endregion


def commutation_coefficients(n: int, k: int) -> dict[int, int]:
    """Integers c_{n,k,l} with t^k E^n = sum_l c_{n,k,l} E^{n-l} t^{k-l}."""
    assert n >= 0 and k >= 0
    table: dict[tuple[int, int], dict[int, int]] = {}

    def coeffs(nn: int, kk: int) -> dict[int, int]:
        if (nn, kk) in table:
            return table[(nn, kk)]
        if nn == 0 or kk == 0:
            out = {0: 1}
        else:
            out = dict(coeffs(nn - 1, kk))
            for l, c in coeffs(nn - 1, kk - 1).items():
                out[l + 1] = out.get(l + 1, 0) - kk * c
            out = {l: c for l, c in out.items() if c != 0}
        table[(nn, kk)] = out
        return out

    return coeffs(n, k)


def commutation_expansion(a: Poly, b: Poly, n: int, k: int, var: str = 't') -> DiffOp:
    """Right-hand side sum_l c_{n,k,l} E^{n-l} t^{k-l}, as an operator."""
    E = euler_operator(a, b, var)
    out = DiffOp.zero(var)
    for l, c in commutation_coefficients(n, k).items():
        shift = DiffOp.multiplication(Poly.monomial(k - l, 1, var), var)
        out = out + compose(E**(n - l), shift).scale(c)
    return out


if __name__ == '__main__':
    z = Poly.x()
    F = FirstOrderData.from_polys(z**2 - 1, -z)
    assert F.w == 0
    assert rodrigues_op(F, 1) == DiffOp((z, z**2 - 1))
    assert rodrigues_apply(F, 1, None, Poly.constant(1)) == z
    assert commute_criterion(z, Poly.zero(), z, Poly.constant(1))
    assert commutation_coefficients(2, 3) == {0: 1, 1: -6, 2: 6}
    print('Passed')
