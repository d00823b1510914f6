"""Rationality test for first-order operators -a d + b with a split over the algebraic numbers.

For a = prod (z - alpha_i) with distinct roots and b = gamma prod (z - beta_j),
the operator is a G-operator iff every residue
gamma prod_j (alpha_i - beta_j) / prod_{i' != i} (alpha_i - alpha_{i'}) is
rational, and, when 0 is a root, also gamma prod_j beta_j / alpha_j.
"""
import dataclasses
import logging
from typing import Optional, Sequence, Union

import sympy

from ..core.poly import Poly

log = logging.getLogger()

Algebraic = Union[str, int, sympy.Expr]


def _sympify(x: Algebraic) -> sympy.Expr:
    return sympy.nsimplify(sympy.sympify(str(x)), rational=False)


def _simplify(x: sympy.Expr) -> sympy.Expr:
    return sympy.radsimp(sympy.simplify(x))


@dataclasses.dataclass
class GOperatorReport:
    alphas: list[sympy.Expr]
    betas: list[sympy.Expr]
    gamma: sympy.Expr
    residues: list[sympy.Expr]
    extra: Optional[sympy.Expr] = None

    @property
    def values(self) -> list[sympy.Expr]:
        return self.residues + ([self.extra] if self.extra is not None else [])

    @property
    def rational(self) -> Optional[bool]:
        """True or False when decided, None when sympy cannot decide rationality."""
        flags = [v.is_rational for v in self.values]
        if any(f is False for f in flags):
            return False
        if all(f is True for f in flags):
            return True
        return None

    def to_json(self) -> dict:
        return {
            'alphas': [str(a) for a in self.alphas],
            'betas': [str(b) for b in self.betas],
            'gamma': str(self.gamma),
            'residues': [str(r) for r in self.residues],
            'extra': str(self.extra) if self.extra is not None else None,
            'g_operator': self.rational,
        }


def g_operator_check(alphas: Sequence[Algebraic], betas: Sequence[Algebraic],
                     gamma: Algebraic) -> GOperatorReport:
    xs = [_sympify(a) for a in alphas]
    ys = [_sympify(b) for b in betas]
    g = _sympify(gamma)
    m = len(xs)
    if m < 2:
        raise ValueError(f'need at least two roots of a, got {m}')
    if len(ys) != m - 1:
        raise ValueError(f'b must have m - 1 = {m - 1} roots, got {len(ys)}')
    for i in range(m):
        for j in range(i + 1, m):
            if _simplify(xs[i] - xs[j]) == 0:
                raise ValueError(f'alpha_{i + 1} = alpha_{j + 1} = {xs[i]}: '
                                 'the roots of a must be distinct')
    zero = [i for i, x in enumerate(xs) if _simplify(x) == 0]
    if zero:
        # the zero root goes last
        xs = [x for i, x in enumerate(xs) if i != zero[0]] + [sympy.Integer(0)]
    residues = []
    for i, x in enumerate(xs):
        num = sympy.Mul(*[x - y for y in ys])
        den = sympy.Mul(*[x - xp for k, xp in enumerate(xs) if k != i])
        residues.append(_simplify(g * num / den))
    extra = None
    if zero:
        extra = _simplify(g * sympy.Mul(*[y / x for y, x in zip(ys, xs[:m - 1])]))
    report = GOperatorReport(xs, ys, g, residues, extra)
    log.info(f'residues {[str(r) for r in residues]}: G-operator {report.rational}')
    return report


def g_operator_from_polys(a: Poly, b: Poly) -> GOperatorReport:
    """Roots of a (squarefree, deg a = deg b + 1) and b through sympy, then the residue test."""
    z = sympy.Symbol('z')
    sa = sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in reversed(a.coeffs)], z)
    sb = sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in reversed(b.coeffs)], z)
    if sa.degree() != sb.degree() + 1:
        raise ValueError(f'need deg a = deg b + 1, got {sa.degree()} and {sb.degree()}')
    ra = sympy.roots(sa)
    rb = sympy.roots(sb)
    if sum(ra.values()) != sa.degree() or any(k > 1 for k in ra.values()):
        raise ValueError(f'a = {a} must split into distinct roots found by sympy')
    if sum(rb.values()) != sb.degree():
        raise ValueError(f'could not find every root of b = {b}')
    alphas = list(ra)
    betas = [r for r, k in rb.items() for _ in range(k)]
    gamma = sb.LC() / sa.LC()
    return g_operator_check(alphas, betas, gamma)


if __name__ == '__main__':
    rep = g_operator_check([1, -1], [0], 1)
    assert rep.residues == [sympy.Rational(1, 2), sympy.Rational(1, 2)] and rep.rational
    assert g_operator_check(['sqrt(2)', 0], [1], 1).rational is False
    print('Passed')
