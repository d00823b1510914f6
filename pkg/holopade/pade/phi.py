"""The functional phi_f : t^k -> f_k attached to a Laurent series f."""
import logging
from fractions import Fraction

from ..core.bipoly import BiPoly, divided_difference
from ..core.laurent import LaurentPoly, LaurentTail
from ..core.poly import Poly
from ..errors import VerificationError
from ..holonomic.stream import HolonomicStream

log = logging.getLogger()


class PhiMap:

    def __init__(self, source: HolonomicStream):
        self.source = source

    @property
    def label(self) -> str:
        return self.source.label

    def __call__(self, p: Poly) -> Fraction:
        return phi_apply(self, p)

    def __repr__(self) -> str:
        return f'PhiMap({self.label})'


def phi_apply(phi: PhiMap, p: Poly) -> Fraction:
    if p.is_zero():
        return Fraction(0)
    f = phi.source.prefix(len(p.coeffs))
    return sum((c * fk for c, fk in zip(p.coeffs, f) if c), Fraction(0))


def phi_bivariate(phi: PhiMap, B: BiPoly) -> Poly:
    """phi applied to the t-powers of B, K[z]-linearly."""
    if B.is_zero():
        return Poly.zero()
    f = phi.source.prefix(B.t_degree + 1)
    out = [Fraction(0)] * (B.z_degree + 1)
    for (i, j), c in B.terms.items():
        out[i] += c * f[j]
    return Poly(out, 'z')


def kernel_member(phi: PhiMap, p: Poly) -> bool:
    return phi_apply(phi, p) == 0


def remainder_coefficients(phi: PhiMap, P: Poly, precision: int) -> LaurentTail:
    """phi(t^k P(t)) at 1/z^{k+1}, for k < precision."""
    d = int(P.degree) if not P.is_zero() else 0
    f = phi.source.prefix(precision + d)
    out = []
    for k in range(precision):
        out.append(sum((c * f[k + m] for m, c in enumerate(P.coeffs) if c), Fraction(0)))
    return LaurentTail(out, precision)


def series_product(phi: PhiMap, P: Poly, precision: int) -> LaurentPoly:
    """P f by series arithmetic, with the tail known to `precision` coefficients."""
    d = int(P.degree) if not P.is_zero() else 0
    return LaurentPoly.from_poly(P.relabel('z')) * phi.source.tail(precision + d)


def q_and_remainder(phi: PhiMap,
                    P: Poly,
                    precision: int,
                    *,
                    cross_check: bool = True) -> tuple[Poly, LaurentTail]:
    """Q = phi((P(z) - P(t)) / (z - t)) and the tail of P f - Q.

    With `cross_check`, both are recomputed from the product P f and any
    disagreement raises VerificationError.
    """
    Q = phi_bivariate(phi, divided_difference(P.relabel('z')))
    R = remainder_coefficients(phi, P, precision)
    if cross_check and not remainders_agree(phi, P, Q, R):
        raise VerificationError(f'{phi.label}: the two remainder computations disagree for P = {P}')
    return Q, R


def remainders_agree(phi: PhiMap, P: Poly, Q: Poly, R: LaurentTail) -> bool:
    prod = series_product(phi, P, R.known())
    ok = prod.poly_part == Q and prod.tail.truncate(R.known()).coeffs == R.coeffs
    if not ok:
        log.warning(f'{phi.label}: P f = {prod!r} but Q = {Q}, R = {R!r}')
    return ok
