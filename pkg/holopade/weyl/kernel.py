"""The Cauchy kernel 1/(z - t) and the action of operators and their adjoints on it.

1/(z - t) is expanded at z = infinity as sum_k t^k / z^{k+1}; every function
here specializes t to a rational point t0 so the result is a Laurent series in z.
"""
import math
from fractions import Fraction

from ..core.bipoly import BiPoly
from ..core.laurent import LaurentPoly, LaurentTail
from ..core.numbers import RationalLike, to_rational
from ..core.poly import Poly
from .diffop import DiffOp, adjoint, apply


def cauchy_kernel(t0: RationalLike, precision: int) -> LaurentTail:
    t0 = to_rational(t0)
    if t0 == 0:
        return LaurentTail.exact((1, ))
    return LaurentTail([t0**k for k in range(precision)], precision)


def operator_on_cauchy_kernel(D: DiffOp, t0: RationalLike, precision: int) -> LaurentPoly:
    """D . 1/(z - t0) for D acting on z."""
    if D.var != 'z':
        raise ValueError('the operator must act on z')
    top = max((int(c.num.degree) for c in D.coeffs if not c.is_zero()), default=0)
    spare = precision + D.order + top
    out = apply(D, cauchy_kernel(t0, spare + 1))
    if out.precision is not None:
        out = LaurentPoly(out.poly_part, out.tail.truncate(min(precision, out.precision)))
    return out


def adjoint_on_cauchy_kernel(D: DiffOp, t0: RationalLike, precision: int) -> LaurentTail:
    """D* . 1/(z - t), with D* acting on t, then specialized at t = t0.

    d_t^i 1/(z - t) = i! sum_k binom(k, i) t^{k-i} / z^{k+1}.
    """
    t0 = to_rational(t0)
    Ds = adjoint(D)
    out = [Fraction(0)] * precision
    for i, c in enumerate(Ds.coeffs):
        if c.is_zero():
            continue
        ci = c(t0) * math.factorial(i)
        for k in range(i, precision):
            out[k] += ci * math.comb(k, i) * t0**(k - i)
    return LaurentTail(out, precision)


def cauchy_kernel_polynomial(m: int, n: int) -> BiPoly:
    """P(t, z) with z^m d^n . 1/(z - t) = P(t, z) + (z^m d^n)* . 1/(z - t).

    Zero when m <= n, else (-1)^n n! sum_{k=0}^{m-n-1} binom(k+n, n) t^k z^{m-n-1-k}.
    """
    assert m >= 0 and n >= 0
    if m <= n:
        return BiPoly()
    scale = (-1)**n * math.factorial(n)
    return BiPoly({(m - n - 1 - k, k): scale * math.comb(k + n, n) for k in range(m - n)})


def cauchy_identity_residual(m: int, n: int, t0: RationalLike, precision: int) -> LaurentPoly:
    """D . 1/(z-t0) - P(t0, z) - D* . 1/(z-t0) for D = z^m d^n; zero up to `precision`."""
    D = DiffOp([0] * n + [Poly.monomial(m)], 'z')
    lhs = operator_on_cauchy_kernel(D, t0, precision)
    P = cauchy_kernel_polynomial(m, n).evaluate_t(to_rational(t0))
    rhs = LaurentPoly.from_tail(adjoint_on_cauchy_kernel(D, t0, precision))
    return lhs - P - rhs
