import dataclasses
import logging
from typing import Optional, Sequence

from ..core.laurent import LaurentTail, Order, order_at_least, order_to_json, ord_inf
from ..core.poly import Poly
from ..holonomic.stream import HolonomicStream
from .phi import PhiMap, q_and_remainder, remainder_coefficients, remainders_agree

log = logging.getLogger()


@dataclasses.dataclass
class VerificationStatus:
    degree_ok: bool
    orders: list[Order]
    orders_ok: list[Optional[bool]]
    remainders_agree: bool
    precision: int

    @property
    def verified(self) -> bool:
        return self.degree_ok and self.remainders_agree and all(x is True for x in self.orders_ok)

    def to_json(self) -> dict:
        return {
            'verified': self.verified,
            'degree_ok': self.degree_ok,
            'orders': [order_to_json(o) for o in self.orders],
            'orders_ok': self.orders_ok,
            'remainders_agree': self.remainders_agree,
            'precision': self.precision,
        }


@dataclasses.dataclass
class PadeSystem:
    """(P, Q_1 .. Q_m) with weights n_j and degree bound M, plus the remainder tails."""
    P: Poly
    Qs: list[Poly]
    weights: list[int]
    M: int
    remainders: list[LaurentTail]
    labels: list[str]
    status: Optional[VerificationStatus] = None
    kernel_dimension: Optional[int] = None

    @property
    def verified(self) -> bool:
        return self.status is not None and self.status.verified

    def to_json(self) -> dict:
        out = {
            'P': self.P.to_json(),
            'degree_P': int(self.P.degree) if not self.P.is_zero() else None,
            'M': self.M,
            'weights': self.weights,
            'series': [{
                'label': label,
                'Q': Q.to_json(),
                'remainder_leading_terms': [[k, c] for k, c in R.leading_terms(3)],
                'remainder_precision': R.precision,
            } for label, Q, R in zip(self.labels, self.Qs, self.remainders)],
            'verification': self.status.to_json() if self.status is not None else None,
        }
        if self.kernel_dimension is not None:
            out['kernel_dimension'] = self.kernel_dimension
        return out


def assemble(P: Poly, streams: Sequence[HolonomicStream], weights: Sequence[int], M: int, *,
             slack: int = 5) -> PadeSystem:
    """Q_j and the remainder tails of P against each series, at precision n_j + slack."""
    Qs, Rs = [], []
    for s, n in zip(streams, weights):
        Q, R = q_and_remainder(PhiMap(s), P, n + slack, cross_check=False)
        Qs.append(Q)
        Rs.append(R)
    return PadeSystem(P, Qs, list(weights), M, Rs, [s.label for s in streams])


def verify(system: PadeSystem, streams: Sequence[HolonomicStream], *,
           slack: int = 5) -> VerificationStatus:
    """Check deg P <= M and ord(P f_j - Q_j) >= n_j + 1, recomputing each remainder twice.

    Each remainder is kept to n_j + slack coefficients, so the order condition
    is always decided.
    """
    if slack < 0:
        raise ValueError(f'slack must be nonnegative, got {slack}')
    P = system.P
    orders, decided, agree, remainders = [], [], True, []
    for s, n, Q in zip(streams, system.weights, system.Qs):
        phi = PhiMap(s)
        R = remainder_coefficients(phi, P, n + slack)
        agree = remainders_agree(phi, P, Q, R) and agree
        order = ord_inf(R)
        orders.append(order)
        decided.append(order_at_least(order, n + 1))
        remainders.append(R)
    system.remainders = remainders
    status = VerificationStatus(degree_ok=P.degree <= system.M,
                                orders=orders,
                                orders_ok=decided,
                                remainders_agree=agree,
                                precision=max(system.weights, default=0) + slack)
    system.status = status
    if not status.verified:
        log.debug(f'verification failed: deg P = {P.degree}, M = {system.M}, '
                  f'orders = {[order_to_json(o) for o in orders]}')
    return status
