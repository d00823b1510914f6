"""Pade-type approximants from products of weighted Rodrigues operators.

For operators D_j = -a d + b_j with Laurent solutions f_{j,u} (D_j . f_{j,u} in
K[z]) and a polynomial F in the ideal (prod_v a_v^{sum_j r_{j,v}}), the
polynomial P = prod_j R_{j,n_j} . F satisfies ord(P f_{j,u} - Q_{j,u}) >= n_j + 1
whenever the R_{j,n_j} commute and P != 0.
"""
import dataclasses
import itertools
import logging
import math
from fractions import Fraction
from typing import Optional, Sequence

from ..core.poly import Poly, product
from ..errors import DegenerateApproximantError, HypothesisError, VerificationError
from ..holonomic.families import FamilyData
from ..holonomic.stream import HolonomicStream, violating_index
from ..weyl.rodrigues import (FirstOrderData, commute_criterion, commutes_directly, in_ideal,
                              rodrigues_apply, rodrigues_op)
from .phi import PhiMap, phi_apply
from .system import PadeSystem, assemble, verify

log = logging.getLogger()


@dataclasses.dataclass(frozen=True)
class RodriguesFactor:
    """One operator of the product: D_j, its weights r_j and its order n_j."""
    data: FirstOrderData
    weights: tuple[int, ...]
    n: int


def _criterion_applies(factors: Sequence[RodriguesFactor]) -> bool:
    # all of the form (1/n!)(d + b_j/a)^n a_1^n over one splitting a = a_1 a_2 with deg a_1 <= 1
    first = factors[0].data
    if len(first.a_factors) != 2 or first.a_factors[0].degree > 1:
        return False
    return all(f.data.a_factors == first.a_factors and f.weights == (0, f.n) for f in factors)


def check_commutativity(factors: Sequence[RodriguesFactor]):
    if len(factors) < 2:
        return
    if _criterion_applies(factors):
        a1 = factors[0].data.a_factors[0]
        a = factors[0].data.a
        for f1, f2 in itertools.combinations(factors, 2):
            if not commute_criterion(a, f1.data.b, f2.data.b, a1):
                raise HypothesisError(f'the Rodrigues operators for b = {f1.data.b} '
                                      f'and b = {f2.data.b} do not commute: '
                                      '(b_2 - b_1) a_1 / a is not a constant')
        return
    ops = [rodrigues_op(f.data, f.n, f.weights) for f in factors]
    for (i, R1), (j, R2) in itertools.combinations(enumerate(ops), 2):
        if not commutes_directly(R1, R2):
            raise HypothesisError(f'the Rodrigues operators {i + 1} and {j + 1} do not commute')


def rodrigues_polynomial(factors: Sequence[RodriguesFactor],
                         F: Poly,
                         *,
                         check: bool = True) -> Poly:
    """prod_j R_{j,n_j} . F, applied right to left."""
    if check:
        gen = product(
            product(p**x for p, x in zip(f.data.a_factors, f.weights)) for f in factors)
        if not in_ideal(F, gen):
            raise HypothesisError(f'F = {F} is not in the ideal generated by {gen}')
        check_commutativity(factors)
    P = F.relabel('z')
    for f in reversed(factors):
        P = rodrigues_apply(f.data, f.n, f.weights, P)
    return P


def rodrigues_construct(factors: Sequence[RodriguesFactor],
                        F: Poly,
                        streams: Sequence[Sequence[HolonomicStream]],
                        *,
                        M: Optional[int] = None,
                        slack: int = 5,
                        strict: bool = True) -> PadeSystem:
    """The approximant system of P = prod_j R_{j,n_j} . F against every stream.

    `streams[j]` are the solutions attached to factor j; each gets weight n_j.
    """
    if len(streams) != len(factors):
        raise ValueError(f'{len(streams)} stream groups for {len(factors)} operators')
    for j, f in enumerate(factors):
        if f.data.w < 0:
            raise HypothesisError(f'operator {j + 1}: w = {f.data.w} < 0')
    P = rodrigues_polynomial(factors, F)
    if P.is_zero():
        desc = ', '.join(f'(a = {f.data.a}, b = {f.data.b}, n = {f.n})' for f in factors)
        log.error(f'P vanishes for {desc} and F = {F}')
        raise DegenerateApproximantError(f'the Rodrigues polynomial P(z) is zero; '
                                         f'the construction needs P(z) != 0 '
                                         f'(operators {desc}, F = {F})')
    for j, f in enumerate(factors):
        k = violating_index(f.data)
        if k is not None:
            raise HypothesisError(f'operator {j + 1}: the recurrence assumption '
                                  f'a_u (k+u) + b_v != 0 fails at k = {k}')
    flat = [s for group in streams for s in group]
    weights = [f.n for f, group in zip(factors, streams) for _ in group]
    M = M if M is not None else int(P.degree)
    system = assemble(P, flat, weights, M, slack=slack)
    status = verify(system, flat, slack=slack)
    log.info(f'constructed P of degree {P.degree} against {len(flat)} series: '
             f'{"verified" if status.verified else "NOT verified"}')
    if strict and not status.verified:
        raise VerificationError(f'the constructed system fails its order conditions: '
                                f'{status.to_json()}')
    return system


def family_factors(fam: FamilyData, n: int) -> list[RodriguesFactor]:
    return [RodriguesFactor(F, fam.weights(n), n) for F in fam.operators]


def construct_family(fam: FamilyData,
                     n: int,
                     h: int,
                     *,
                     slack: int = 5,
                     strict: bool = True) -> PadeSystem:
    """P_{n,h} = prod_j R_{j,n} . (z^h a_2^{dn}) with its Q_{j,u,h}."""
    if not 0 <= h <= fam.W:
        raise ValueError(f'h = {h} outside 0 .. W = {fam.W}')
    return rodrigues_construct(family_factors(fam, n),
                               fam.F(h, n),
                               fam.streams,
                               M=fam.M(h, n),
                               slack=slack,
                               strict=strict)


def family_polynomial(fam: FamilyData, n: int, h: int) -> Poly:
    return rodrigues_polynomial(family_factors(fam, n), fam.F(h, n))


#region coefficient lemma
def check_splitting(fam: FamilyData):
    """deg a_1 <= 1, a_1 monic and (b_{j1} - b_{j2}) / a_2 a nonzero constant."""
    if fam.a1.degree > 1:
        raise HypothesisError(f'deg a_1 = {fam.a1.degree} > 1')
    if fam.a1.leading != 1:
        raise HypothesisError(f'a_1 = {fam.a1} is not monic')
    for j1, j2 in itertools.combinations(range(fam.d), 2):
        if fam.gamma(j1, j2) == 0:
            raise HypothesisError(f'b_{j1 + 1} = b_{j2 + 1}: the operators coincide')


def cross_factor(fam: FamilyData, j: int, n: int) -> Fraction:
    """prod_{j' != j} prod_{k=1}^n (gamma_{j',j} - k eps)."""
    out = Fraction(1)
    for jp in range(fam.d):
        if jp == j:
            continue
        g = fam.gamma(jp, j)
        for k in range(1, n + 1):
            out *= g - k * fam.eps
    return out


@dataclasses.dataclass
class CoefficientCheck:
    j: int
    u: int
    h: int
    direct: Fraction
    closed: Fraction

    @property
    def match(self) -> bool:
        return self.direct == self.closed

    def to_json(self) -> dict:
        return {'j': self.j, 'u': self.u, 'h': self.h, 'direct': str(self.direct),
                'closed': str(self.closed), 'match': self.match}


def top_coefficient_check(fam: FamilyData, n: int, h: int, j: int, u: int, *,
                          P: Optional[Poly] = None) -> CoefficientCheck:
    """phi_{j,u}(t^n P_h) against ((-1)^n / (n!)^{d-1}) G_j phi_{j,u}(t^h a_1^n a_2^{dn})."""
    check_splitting(fam)
    P = P if P is not None else family_polynomial(fam, n, h)
    phi = PhiMap(fam.streams[j][u])
    direct = phi_apply(phi, Poly.monomial(n) * P)
    base = phi_apply(phi, Poly.monomial(h) * fam.a1**n * fam.a2**(fam.d * n))
    closed = Fraction((-1)**n, math.factorial(n)**(fam.d - 1)) * cross_factor(fam, j, n) * base
    out = CoefficientCheck(j, u, h, direct, closed)
    if not out.match:
        raise VerificationError(f'coefficient lemma fails at j = {j + 1}, u = {u}, h = {h}: '
                                f'{direct} != {closed}')
    return out
#endregion


def rodrigues_kernel_check(F: FirstOrderData, f: HolonomicStream, n: int, G: Poly, k: int) -> bool:
    """t^k E^n . (a^n G) lies in ker phi_f, for k < n and D . f in K[z]."""
    if not 0 <= k < n:
        raise ValueError(f'need 0 <= k < n, got k = {k}, n = {n}')
    image = rodrigues_apply(F, n, None, G) * math.factorial(n)
    return phi_apply(PhiMap(f), Poly.monomial(k) * image) == 0
