"""Closed forms for Delta_n and Theta_n, evaluated exactly as printed.

No sign is corrected here; disagreements with the computed determinants are
recorded by the caller.
"""
import itertools
import math
from fractions import Fraction

from ..core.numbers import pochhammer, pochhammer_ratio
from ..holonomic.families import FamilySpec

EXAMPLE_FAMILIES = ('bessel', 'laguerre-gamma', 'laguerre-delta', 'hermite')


def _vandermonde(xs) -> Fraction:
    out = Fraction(1)
    for x1, x2 in itertools.combinations(xs, 2):
        out *= x2 - x1
    return out


def _triangle_sign(d: int) -> int:
    return (-1)**(d * (d - 1) // 2)


def _shifted_cross(xs, n: int) -> Fraction:
    """prod_j prod_{j' != j} prod_{k=1}^n (x_{j'} - x_j - k)."""
    out = Fraction(1)
    for j, xj in enumerate(xs):
        for jp, xjp in enumerate(xs):
            if jp != j:
                for k in range(1, n + 1):
                    out *= xjp - xj - k
    return out


def _plain_cross(xs, n: int) -> Fraction:
    """prod_j prod_{j' != j} (x_{j'} - x_j)^n."""
    out = Fraction(1)
    for j, xj in enumerate(xs):
        for jp, xjp in enumerate(xs):
            if jp != j:
                out *= (xjp - xj)**n
    return out


def delta_closed_chebyshev(u: int, n: int) -> Fraction:
    """(-1)^{(n+1)(u-1)} ((n+1)u-1-n)_n / n! prod_{l=0}^{u-2} ((u-1)/u)_n / ((u+l)/u)_n."""
    assert u >= 2 and n >= 1
    out = Fraction((-1)**((n + 1) * (u - 1)))
    out *= pochhammer((n + 1) * u - 1 - n, n) / math.factorial(n)
    for l in range(u - 1):
        out *= pochhammer_ratio(Fraction(u - 1, u), Fraction(u + l, u), n)
    return out


def chebyshev_theta_entry(u: int, l: int, n: int) -> Fraction:
    """phi_l(t^l (t^u - 1)^n) = (-1)^n ((u-1)/u)_n / ((u+l)/u)_n."""
    return (-1)**n * pochhammer_ratio(Fraction(u - 1, u), Fraction(u + l, u), n)


def delta_closed_examples(spec: FamilySpec, n: int) -> Fraction:
    f = spec.family
    if f not in EXAMPLE_FAMILIES:
        raise ValueError(f'no closed form for family {f!r}; expected one of {EXAMPLE_FAMILIES}')
    d = spec.d
    head = Fraction(-1, math.factorial(n)**d)**d
    if f == 'bessel':
        g = spec.gamma
        out = _triangle_sign(d) * head * _shifted_cross(g, n) * _vandermonde(g)
        for gj in g:
            out *= pochhammer(d * (n + 1) + gj + 1, n) / pochhammer(2 + gj, (d + 1) * n + d - 1)
        return out
    if f == 'laguerre-gamma':
        g, delta = spec.gamma, spec.delta[0]
        out = head * _plain_cross(g, n) * _vandermonde(g)
        for j, gj in enumerate(g, start=1):
            out *= pochhammer(1 + delta, d * n + j - 1) / gj**((d - 1) * n + d)
        return out
    if f == 'laguerre-delta':
        gamma, dl = spec.gamma[0], spec.delta
        out = head * _shifted_cross(dl, n) * _vandermonde(dl)
        for j, dj in enumerate(dl, start=1):
            out *= pochhammer(1 + dj, n) / gamma**j
        return out
    gamma, dl = spec.gamma[0], spec.delta
    tri = d * (d - 1) // 2
    return head * _plain_cross(dl, n) * _triangle_sign(d) * gamma**(d * n - tri) * _vandermonde(dl)


def theta_closed(spec: FamilySpec, n: int) -> Fraction:
    """The reduced product formula for Theta_n."""
    f = spec.family
    d = spec.d
    if f == 'chebyshev':
        out = Fraction(1)
        for l in range(spec.u - 1):
            out *= chebyshev_theta_entry(spec.u, l, n)
        return out
    if f == 'bessel':
        g = spec.gamma
        out = _triangle_sign(d) * _vandermonde(g)
        for gj in g:
            out /= pochhammer(2 + gj, (d + 1) * n + d - 1)
        return out
    if f == 'laguerre-gamma':
        g, delta = spec.gamma, spec.delta[0]
        out = _vandermonde(g)
        for j, gj in enumerate(g, start=1):
            out *= pochhammer(1 + delta, d * n + j - 1) / gj**(d * (n + 1))
        return out
    if f == 'laguerre-delta':
        gamma, dl = spec.gamma[0], spec.delta
        out = _vandermonde(dl)
        for j, dj in enumerate(dl, start=1):
            out *= pochhammer(1 + dj, n) / gamma**(n + j)
        return out
    if f == 'hermite':
        gamma = spec.gamma[0]
        return (-1 / gamma)**(d * (d - 1) // 2) * _vandermonde(spec.delta)
    raise ValueError(f'no closed form for Theta_n of family {f!r}')


if __name__ == '__main__':
    assert delta_closed_chebyshev(2, 1) == 1
    assert delta_closed_examples(FamilySpec('hermite', gamma=(1, ), delta=(0, 1)), 1) == 1
    print('Passed')
