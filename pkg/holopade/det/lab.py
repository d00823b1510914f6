"""The determinant Delta_n of the approximants P_h, Q_{j,u,h} (h = 0 .. W).

Delta_n(z) is assembled from polynomial entries and evaluated over Q[z]; it
must come out constant. Expanding along the first row after subtracting
f_{j,u} times that row from row (j, u) gives

    Delta_n = p_W ((-1)^n / (n!)^{d-1})^W prod_j G_j^{w_j+1} Theta_n,

with G_j = prod_{j' != j} prod_{k=1}^n (gamma_{j',j} - k eps) and Theta_n the
determinant of phi_{j,u}(t^k a_1^n a_2^{dn}), k < W. The printed proposition
carries (-1/(n!)^{d-1})^W instead; both are reported.
"""
import dataclasses
import itertools
import logging
import math
from fractions import Fraction
from typing import Optional

from ..core.bipoly import divided_difference
from ..core.laurent import LaurentPoly, LaurentTail
from ..core.linalg import det_exact, det_poly
from ..core.poly import Poly
from ..errors import DegenerateApproximantError, VerificationError
from ..holonomic.families import FamilyData, FamilySpec, family_streams
from ..pade.construct import CoefficientCheck, check_splitting, cross_factor, family_polynomial, \
    top_coefficient_check
from ..pade.phi import PhiMap, phi_apply, phi_bivariate, remainder_coefficients
from .closed_forms import (EXAMPLE_FAMILIES, delta_closed_chebyshev, delta_closed_examples,
                           theta_closed)

log = logging.getLogger()


@dataclasses.dataclass
class DetSetup:
    spec: FamilySpec
    n: int
    data: FamilyData = dataclasses.field(init=False, repr=False)

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f'n must be positive, got {self.n}')
        self.data = family_streams(self.spec)
        check_splitting(self.data)

    @property
    def d(self) -> int:
        return self.data.d

    @property
    def w(self) -> list[int]:
        return self.data.w

    @property
    def W(self) -> int:
        return self.data.W

    @property
    def eps(self) -> int:
        return self.data.eps

    @property
    def gammas(self) -> dict[tuple[int, int], Fraction]:
        d = self.d
        pairs = itertools.permutations(range(d), 2)
        return {(j1, j2): self.data.gamma(j1, j2) for j1, j2 in pairs}

    def rows(self) -> list[tuple[int, int]]:
        """Row labels (j, u), j outer."""
        return [(j, u) for j, w in enumerate(self.w) for u in range(w + 1)]


@dataclasses.dataclass
class DetReport:
    family: str
    n: int
    delta: Fraction
    theta: Fraction
    p_W: Fraction
    closed_form: Fraction
    prop_form: Fraction
    derived_form: Fraction
    delta_degree: int
    coefficient_checks: list[CoefficientCheck] = dataclasses.field(default_factory=list)
    matrix: Optional[list[list[Poly]]] = None

    @property
    def match(self) -> bool:
        return self.delta == self.closed_form

    @property
    def ratio(self) -> Optional[Fraction]:
        return self.delta / self.closed_form if self.closed_form != 0 else None

    @property
    def diagnosis(self) -> str:
        return diagnose(self.delta, self.closed_form)

    @property
    def prop_diagnosis(self) -> str:
        return diagnose(self.delta, self.prop_form)

    def to_json(self, *, dump_matrix: bool = False) -> dict:
        out = {
            'family': self.family,
            'n': self.n,
            'delta': str(self.delta),
            'delta_degree': self.delta_degree,
            'theta': str(self.theta),
            'p_W': str(self.p_W),
            'closed_form': str(self.closed_form),
            'prop_form': str(self.prop_form),
            'derived_form': str(self.derived_form),
            'match': self.match,
            'diagnosis': self.diagnosis,
            'prop_diagnosis': self.prop_diagnosis,
            'ratio': str(self.ratio) if self.ratio is not None else None,
            'coefficient_checks': [c.to_json() for c in self.coefficient_checks],
        }
        if dump_matrix and self.matrix is not None:
            out['matrix'] = [[p.to_json() for p in row] for row in self.matrix]
        return out


def diagnose(value: Fraction, claimed: Fraction) -> str:
    if value == claimed:
        return 'exact'
    if value == -claimed:
        return 'sign'
    return 'mismatch'


#region assembly
def approximant_polynomials(setup: DetSetup) -> list[Poly]:
    out = []
    for h in range(setup.W + 1):
        P = family_polynomial(setup.data, setup.n, h)
        if P.is_zero():
            raise DegenerateApproximantError(
                f'P_{h} vanishes for {setup.spec.family}, n = {setup.n}')
        out.append(P)
    return out


def delta_matrix(setup: DetSetup, Ps: list[Poly]) -> list[list[Poly]]:
    rows = [list(Ps)]
    diffs = [divided_difference(P) for P in Ps]
    for j, u in setup.rows():
        phi = PhiMap(setup.data.streams[j][u])
        rows.append([phi_bivariate(phi, B) for B in diffs])
    return rows


def theta_matrix(setup: DetSetup) -> list[list[Fraction]]:
    fam, n = setup.data, setup.n
    base = fam.a1**n * fam.a2**(fam.d * n)
    out = []
    for j, u in setup.rows():
        phi = PhiMap(fam.streams[j][u])
        out.append([phi_apply(phi, Poly.monomial(k) * base) for k in range(setup.W)])
    return out
#endregion


def prop_forms(setup: DetSetup, p_W: Fraction, theta: Fraction) -> tuple[Fraction, Fraction]:
    """(derived, printed) right-hand sides."""
    n, d, W = setup.n, setup.d, setup.W
    g = Fraction(1)
    for j, w in enumerate(setup.w):
        g *= cross_factor(setup.data, j, n)**(w + 1)
    scale = math.factorial(n)**(d - 1)
    derived = p_W * Fraction((-1)**n, scale)**W * g * theta
    printed = p_W * Fraction(-1, scale)**W * g * theta
    return derived, printed


def closed_form(setup: DetSetup, fallback: Fraction) -> Fraction:
    spec = setup.spec
    if spec.family == 'chebyshev':
        return delta_closed_chebyshev(spec.u, setup.n)
    if spec.family in EXAMPLE_FAMILIES:
        return delta_closed_examples(spec, setup.n)
    return fallback


def build_delta(setup: DetSetup,
                *,
                coefficient_checks: bool = True,
                keep_matrix: bool = False) -> DetReport:
    Ps = approximant_polynomials(setup)
    matrix = delta_matrix(setup, Ps)
    delta_poly = det_poly(matrix)
    if delta_poly.degree > 0:
        raise VerificationError(f'Delta_n(z) = {delta_poly} is not a constant')
    delta = delta_poly.coeff(0)
    W = setup.W
    p_W = Ps[W].coeff((setup.n + 1) * W)
    theta = det_exact(theta_matrix(setup))
    derived, printed = prop_forms(setup, p_W, theta)
    if derived != delta:
        raise VerificationError(f'Delta_n = {delta} but the first-row expansion gives {derived}')
    checks = []
    if coefficient_checks:
        for j, u in setup.rows():
            for h in range(W):
                checks.append(top_coefficient_check(setup.data, setup.n, h, j, u, P=Ps[h]))
    report = DetReport(family=setup.spec.family,
                       n=setup.n,
                       delta=delta,
                       theta=theta,
                       p_W=p_W,
                       closed_form=closed_form(setup, printed),
                       prop_form=printed,
                       derived_form=derived,
                       delta_degree=max(int(delta_poly.degree), 0),
                       coefficient_checks=checks,
                       matrix=matrix if keep_matrix else None)
    log.info(f'{setup.spec.family} n = {setup.n}: Delta = {delta}, closed form {report.diagnosis}')
    return report


#region remainder oracle
def _laurent_det(rows: list[list[LaurentTail]]) -> LaurentTail:
    n = len(rows)
    out = LaurentTail.zero()
    for perm in itertools.permutations(range(n)):
        sign = 1
        for i, j in itertools.combinations(range(n), 2):
            if perm[i] > perm[j]:
                sign = -sign
        term = None
        for i in range(n):
            x = rows[i][perm[i]]
            term = x if term is None else term * x
        out = out + (term if sign > 0 else -term)
    return out


def delta_from_remainders(setup: DetSetup) -> Fraction:
    """Delta_n from the first row and the remainder rows, by series arithmetic.

    Row (j, u) minus f_{j,u} times the first row is minus the remainder row, so
    Delta_n = (-1)^W times the constant term of det[P_h; R_{j,u,h}].
    """
    Ps = approximant_polynomials(setup)
    W = setup.W
    precision = (setup.n + 1) * W + int(Ps[-1].degree) + 2
    R = []
    for j, u in setup.rows():
        phi = PhiMap(setup.data.streams[j][u])
        R.append([remainder_coefficients(phi, P, precision) for P in Ps])
    total = LaurentPoly.from_poly(Poly.zero())
    for h, P in enumerate(Ps):
        minor = _laurent_det([[row[c] for c in range(W + 1) if c != h] for row in R])
        term = LaurentPoly.from_poly(P) * minor
        total = total + (term if h % 2 == 0 else -term)
    if total.poly_part.degree > 0:
        raise VerificationError(f'the remainder expansion has polynomial part {total.poly_part}')
    return (-1)**W * total.poly_part.coeff(0)
#endregion


@dataclasses.dataclass
class ThetaCheck:
    family: str
    n: int
    direct: Fraction
    formula: Fraction

    @property
    def match(self) -> bool:
        return self.direct == self.formula

    @property
    def diagnosis(self) -> str:
        return diagnose(self.direct, self.formula)


def theta_comparison(spec: FamilySpec, n: int) -> ThetaCheck:
    setup = DetSetup(spec, n)
    return ThetaCheck(spec.family, n, det_exact(theta_matrix(setup)), theta_closed(spec, n))


def theta_vandermonde_check(spec: FamilySpec, n: int) -> bool:
    return theta_comparison(spec, n).match
