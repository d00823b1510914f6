"""Brute-force Pade-type approximants by linear algebra.

With P = sum_m p_m z^m, the order condition ord(P f_j - Q_j) >= n_j + 1 is the
set of linear equations phi_j(t^k P(t)) = sum_m p_m f_{j,k+m} = 0, k < n_j.
"""
import logging
from fractions import Fraction
from typing import Sequence

from ..core.linalg import kernel_basis
from ..core.poly import Poly
from ..errors import VerificationError
from ..holonomic.stream import HolonomicStream
from .system import PadeSystem, assemble, verify

log = logging.getLogger()


def order_conditions(streams: Sequence[HolonomicStream], weights: Sequence[int],
                     M: int) -> list[list[Fraction]]:
    rows = []
    for s, n in zip(streams, weights):
        f = s.prefix(n + M)
        for k in range(n):
            rows.append([f[k + m] for m in range(M + 1)])
    return rows


def solve_pade_oracle(streams: Sequence[HolonomicStream], weights: Sequence[int], M: int, *,
                      slack: int = 5) -> PadeSystem:
    N = sum(weights)
    if M < N:
        raise ValueError(f'degree bound M = {M} is below the number of conditions {N}')
    rows = order_conditions(streams, weights, M)
    basis = kernel_basis(rows, M + 1)
    if not basis:
        raise VerificationError(f'the oracle found only the zero solution with M = {M} >= N = {N}')
    P = Poly(basis[-1], 'z')
    log.debug(f'oracle: kernel of dimension {len(basis)}, P = {P}')
    system = assemble(P, streams, weights, M, slack=slack)
    system.kernel_dimension = len(basis)
    verify(system, streams, slack=slack)
    return system


def kernel_dimension(streams: Sequence[HolonomicStream], weights: Sequence[int], M: int) -> int:
    return len(kernel_basis(order_conditions(streams, weights, M), M + 1))


def oracle_contains(P: Poly, streams: Sequence[HolonomicStream], weights: Sequence[int]) -> bool:
    """True iff P solves every order condition of the oracle system."""
    M = max(int(P.degree), 0) if not P.is_zero() else 0
    for row in order_conditions(streams, weights, M):
        if sum((c * x for c, x in zip(P.coeffs, row)), Fraction(0)) != 0:
            return False
    return True


def proportional(P1: Poly, P2: Poly) -> bool:
    """Cross-multiplication test on coefficient vectors; both must be nonzero."""
    if P1.is_zero() or P2.is_zero():
        return False
    n = max(len(P1.coeffs), len(P2.coeffs))
    a = [P1.coeff(i) for i in range(n)]
    b = [P2.coeff(i) for i in range(n)]
    i0 = next(i for i in range(n) if a[i] != 0)
    return all(a[i] * b[i0] == b[i] * a[i0] for i in range(n))
