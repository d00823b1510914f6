"""Laurent series solutions of first-order operators, generated on demand.

For D = -a(z) d + b(z) and f = sum_k f_k / z^{k+1}, the coefficient of
1/z^{K+1} in D . f is

    sum_i a_i (K+i) f_{K+i-1} + sum_j b_j f_{K+j},

so D . f is a polynomial exactly when this vanishes for every K >= 0. The
largest index that occurs is K + w + 1 with w = max(deg a - 2, deg b - 1), and
its coefficient c(K) is affine in K.
"""
import logging
import threading
from fractions import Fraction
from typing import Callable, Optional, Sequence

from ..core.laurent import LaurentTail
from ..core.numbers import RationalLike, to_rational
from ..errors import HypothesisError
from ..weyl.rodrigues import FirstOrderData

log = logging.getLogger()

Law = Callable[[int], Fraction]


def leading_coefficient(F: FirstOrderData, K: int) -> Fraction:
    """c(K), the coefficient of f_{K+w+1} in the K-th equation."""
    a, b, w = F.a, F.b, F.w
    out = Fraction(0)
    if F.u - 1 == w + 1:
        out += a.coeff(F.u) * (K + F.u)
    if F.v == w + 1:
        out += b.coeff(w + 1)
    return out


def violating_index(F: FirstOrderData) -> Optional[int]:
    """The k >= 0 with c(k) = 0, if there is one."""
    if F.w < 0:
        raise HypothesisError(f'w = {F.w} < 0: the operator has no Laurent solution basis')
    c0 = leading_coefficient(F, 0)
    slope = leading_coefficient(F, 1) - c0
    if slope == 0:
        return None if c0 != 0 else 0
    root = -c0 / slope
    if root.denominator == 1 and root >= 0:
        return int(root)
    return None


def check_assumption(F: FirstOrderData) -> bool:
    return violating_index(F) is None


def equation_residual(F: FirstOrderData, K: int, coeff: Callable[[int], Fraction]) -> Fraction:
    a, b = F.a, F.b
    out = Fraction(0)
    for i, ai in enumerate(a.coeffs):
        if ai and K + i - 1 >= 0:
            out += ai * (K + i) * coeff(K + i - 1)
    for j, bj in enumerate(b.coeffs):
        if bj:
            out += bj * coeff(K + j)
    return out


def recurrence_residual(F: FirstOrderData, prefix: Sequence[RationalLike]) -> list[Fraction]:
    """Residual of every equation whose indices all lie inside `prefix`."""
    cs = [to_rational(c) for c in prefix]
    return [equation_residual(F, K, cs.__getitem__) for K in range(len(cs) - F.w - 1)]


class HolonomicStream:
    """Coefficients f_0, f_1, ... of a solution of D . f in K[z], cached as they are generated.

    The first w + 1 values are the seeds; every later one is solved from the
    recurrence. Extension happens under a lock and never rewrites a value that
    was already handed out.
    """

    def __init__(self,
                 source: FirstOrderData,
                 seeds: Sequence[RationalLike],
                 *,
                 label: str = 'f',
                 index: Optional[int] = None,
                 law: Optional[Law] = None,
                 check: bool = True):
        w = source.w
        if w < 0:
            raise HypothesisError(f'w = {w} < 0: the operator has no Laurent solution basis')
        if len(seeds) != w + 1:
            raise ValueError(f'{label}: expected {w + 1} seeds, got {len(seeds)}')
        if check:
            k = violating_index(source)
            if k is not None:
                raise HypothesisError(f'{label}: the recurrence assumption fails, c({k}) = 0')
        self.source = source
        self.label = label
        self.index = index
        self.law = law
        self._cache: list[Fraction] = [to_rational(s) for s in seeds]
        self._lock = threading.Lock()

    def __getstate__(self):
        state = self.__dict__.copy()
        del state['_lock']
        return state

    def __setstate__(self, state):
        self.__dict__.update(state)
        self._lock = threading.Lock()

    @property
    def w(self) -> int:
        return self.source.w

    def __len__(self) -> int:
        return len(self._cache)

    def _extend(self, n: int):
        F = self.source
        w = F.w
        with self._lock:
            cache = self._cache
            start = len(cache)
            while len(cache) < n:
                K = len(cache) - w - 1
                c = leading_coefficient(F, K)
                if c == 0:
                    raise HypothesisError(
                        f'{self.label}: the recurrence assumption fails, c({K}) = 0')
                # residual with the unknown taken as zero
                rest = equation_residual(F, K,
                                         lambda k: cache[k] if k < len(cache) else Fraction(0))
                cache.append(-rest / c)
            if n > start:
                log.debug(f'{self.label}: extended from {start} to {n} coefficients')

    def __getitem__(self, k: int) -> Fraction:
        if k < 0:
            raise IndexError(k)
        if k >= len(self._cache):
            self._extend(k + 1)
        return self._cache[k]

    def prefix(self, n: int) -> tuple[Fraction, ...]:
        if n > len(self._cache):
            self._extend(n)
        return tuple(self._cache[:n])

    def tail(self, precision: int) -> LaurentTail:
        return LaurentTail(self.prefix(precision), precision)

    def __repr__(self) -> str:
        return f'HolonomicStream({self.label}, w={self.w}, cached={len(self._cache)})'


def solution_basis(F: FirstOrderData,
                   *,
                   check: bool = True,
                   label: str = 'f') -> list[HolonomicStream]:
    """The w + 1 streams whose seeds are the unit vectors."""
    w = F.w
    if w < 0:
        raise HypothesisError(f'w = {w} < 0: the operator has no Laurent solution basis')
    out = []
    for l in range(w + 1):
        seeds = [1 if k == l else 0 for k in range(w + 1)]
        out.append(HolonomicStream(F, seeds, label=f'{label}_{l}', index=l, check=check))
    return out
