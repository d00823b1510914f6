"""Named families of first-order operators and their Laurent solutions.

Every family is presented through one splitting a = a_1 a_2 shared by all of
its operators D_j = -a d + b_j. Its Rodrigues operators are
R_{j,n} = (1/n!) (d + b_j/a)^n a_1^n, i.e. the weights (0, n) on (a_1, a_2),
and the approximants are P_h = prod_j R_{j,n} . (z^h a_2^{dn}), h = 0 .. W.
"""
import dataclasses
import itertools
import logging
from fractions import Fraction
from typing import Optional, Sequence

from ..core.numbers import (is_integer, is_negative_integer, pochhammer, pochhammer_ratio,
                            to_rational)
from ..core.poly import Poly, product
from ..core.ratfunc import RatFunc
from ..errors import HypothesisError
from ..weyl.rodrigues import FirstOrderData
from .stream import HolonomicStream, solution_basis

log = logging.getLogger()

FAMILIES = ('chebyshev', 'bessel', 'laguerre-gamma', 'laguerre-delta', 'hermite', 'lerch', 'custom')


@dataclasses.dataclass(frozen=True)
class FamilySpec:
    family: str
    u: Optional[int] = None
    gamma: tuple[Fraction, ...] = ()
    delta: tuple[Fraction, ...] = ()
    alpha: tuple[Fraction, ...] = ()
    # custom family
    a: Optional[Poly] = None
    a1: Optional[Poly] = None
    b: tuple[Poly, ...] = ()

    def __post_init__(self):
        for name in ('gamma', 'delta', 'alpha'):
            object.__setattr__(self, name, tuple(to_rational(x) for x in getattr(self, name)))
        object.__setattr__(self, 'b', tuple(self.b))
        self.validate()

    #region validation
    def validate(self):
        f = self.family
        if f not in FAMILIES:
            raise HypothesisError(f'unknown family {f!r}; expected one of {FAMILIES}')
        if f == 'chebyshev':
            if self.u is None or self.u < 2:
                raise HypothesisError(f'chebyshev needs an integer u >= 2, got {self.u}')
        elif f == 'bessel':
            self._need(gamma=True)
            for g in self.gamma:
                if is_integer(g) and g < -1:
                    raise HypothesisError(f'bessel: gamma = {g} is an integer less than -1')
            _non_integral_differences('gamma', self.gamma)
        elif f == 'laguerre-gamma':
            self._need(gamma=True)
            if len(self.delta) != 1:
                raise HypothesisError('laguerre-gamma takes exactly one delta')
            if any(g == 0 for g in self.gamma):
                raise HypothesisError('laguerre-gamma: every gamma_j must be nonzero')
            _distinct('gamma', self.gamma)
            _not_negative_integer('delta', self.delta)
        elif f == 'laguerre-delta':
            if len(self.gamma) != 1 or self.gamma[0] == 0:
                raise HypothesisError('laguerre-delta takes exactly one nonzero gamma')
            if not self.delta:
                raise HypothesisError('laguerre-delta needs at least one delta')
            _not_negative_integer('delta', self.delta)
            _non_integral_differences('delta', self.delta)
        elif f == 'hermite':
            if len(self.gamma) != 1 or self.gamma[0] == 0:
                raise HypothesisError('hermite takes exactly one nonzero gamma')
            if not self.delta:
                raise HypothesisError('hermite needs at least one delta')
            _distinct('delta', self.delta)
        elif f == 'lerch':
            self._need(gamma=True)
            if not self.alpha:
                raise HypothesisError('lerch needs at least one alpha')
            if any(x == 0 for x in self.alpha):
                raise HypothesisError('lerch: every alpha_i must be nonzero')
            _distinct('alpha', self.alpha)
            _not_negative_integer('gamma', self.gamma)
            _non_integral_differences('gamma', self.gamma)
        elif f == 'custom':
            if self.a is None or self.a.is_zero():
                raise HypothesisError('custom needs a nonzero polynomial a')
            if not self.b:
                raise HypothesisError('custom needs at least one polynomial b')
            a1 = self.a1 if self.a1 is not None else Poly.constant(1)
            if a1.is_zero() or not a1.divides(self.a):
                raise HypothesisError(f'custom: a_1 = {a1} does not divide a = {self.a}')

    def _need(self, *, gamma: bool):
        if gamma and not self.gamma:
            raise HypothesisError(f'{self.family} needs at least one gamma')
    #endregion

    @property
    def d(self) -> int:
        """Number of operators."""
        if self.family == 'chebyshev':
            return 1
        if self.family in ('laguerre-delta', 'hermite'):
            return len(self.delta)
        if self.family == 'custom':
            return len(self.b)
        return len(self.gamma)

    def to_json(self) -> dict:
        out = {'family': self.family}
        if self.u is not None:
            out['u'] = self.u
        for name in ('gamma', 'delta', 'alpha'):
            if getattr(self, name):
                out[name] = [str(x) for x in getattr(self, name)]
        if self.family == 'custom':
            out['a'] = self.a.to_json()
            out['a1'] = (self.a1 or Poly.constant(1)).to_json()
            out['b'] = [p.to_json() for p in self.b]
        return out


def _distinct(name: str, xs: Sequence[Fraction]):
    if len(set(xs)) != len(xs):
        raise HypothesisError(f'the {name}_j must be pairwise distinct, got {[str(x) for x in xs]}')


def _non_integral_differences(name: str, xs: Sequence[Fraction]):
    for x, y in itertools.combinations(xs, 2):
        if is_integer(x - y):
            raise HypothesisError(f'{name} differences must not be integers: {x} - {y} = {x - y}')


def _not_negative_integer(name: str, xs: Sequence[Fraction]):
    for x in xs:
        if is_negative_integer(x):
            raise HypothesisError(f'{name} = {x} must not be a negative integer')


@dataclasses.dataclass
class FamilyData:
    """Operators, splitting and solution streams of a family.

    `streams[j]` holds the w_j + 1 series attached to operator j.
    """
    spec: FamilySpec
    a1: Poly
    a2: Poly
    bs: tuple[Poly, ...]
    streams: tuple[tuple[HolonomicStream, ...], ...]

    @property
    def a(self) -> Poly:
        return self.a1 * self.a2

    @property
    def d(self) -> int:
        return len(self.bs)

    @property
    def operators(self) -> list[FirstOrderData]:
        return [FirstOrderData((self.a1, self.a2), b) for b in self.bs]

    @property
    def w(self) -> list[int]:
        return [F.w for F in self.operators]

    @property
    def W(self) -> int:
        return sum(w + 1 for w in self.w)

    @property
    def eps(self) -> int:
        """1 when deg a_1 = 1, else 0."""
        return 1 if self.a1.degree == 1 else 0

    def weights(self, n: int) -> tuple[int, int]:
        return (0, n)

    def flat_streams(self) -> list[HolonomicStream]:
        return [s for row in self.streams for s in row]

    def F(self, h: int, n: int) -> Poly:
        return Poly.monomial(h) * self.a2**(self.d * n)

    def M(self, h: int, n: int) -> int:
        return h + n * self.W

    def gamma(self, j1: int, j2: int) -> Fraction:
        """(b_{j1} - b_{j2}) / a_2, which must be a constant."""
        q = RatFunc(self.bs[j1] - self.bs[j2], self.a2)
        if not (q.is_polynomial() and q.num.is_constant()):
            raise HypothesisError(f'(b_{j1 + 1} - b_{j2 + 1}) / a_2 = {q!r} is not a constant')
        return q.num.coeff(0)


#region constructors
def _law_stream(F: FirstOrderData, law, label: str, index: int) -> HolonomicStream:
    return HolonomicStream(F, [law(k) for k in range(F.w + 1)], label=label, index=index, law=law)


def _chebyshev(spec: FamilySpec) -> FamilyData:
    u = spec.u
    a2 = Poly.monomial(u) - 1
    b = -Poly.monomial(u - 1)
    F = FirstOrderData((Poly.constant(1), a2), b)

    def law_for(l: int):

        def law(k: int) -> Fraction:
            q, r = divmod(k - l, u)
            if k < l or r:
                return Fraction(0)
            return pochhammer_ratio(Fraction(1 + l, u), Fraction(u + l, u), q)

        return law

    streams = tuple(_law_stream(F, law_for(l), f'f_{l}', l) for l in range(u - 1))
    return FamilyData(spec, Poly.constant(1), a2, (b, ), (streams, ))


def _bessel(spec: FamilySpec) -> FamilyData:
    z = Poly.x()
    bs, streams = [], []
    for j, g in enumerate(spec.gamma):
        b = g * z - 1
        F = FirstOrderData((z, z), b)
        law = (lambda g: lambda k: 1 / pochhammer(2 + g, k))(g)
        bs.append(b)
        streams.append((_law_stream(F, law, f'f_{j + 1}', 0), ))
    return FamilyData(spec, z, z, tuple(bs), tuple(streams))


def _laguerre_gamma(spec: FamilySpec) -> FamilyData:
    z = Poly.x()
    delta = spec.delta[0]
    bs, streams = [], []
    for j, g in enumerate(spec.gamma):
        b = -g * z + delta
        F = FirstOrderData((Poly.constant(1), z), b)
        law = (lambda g: lambda k: pochhammer(1 + delta, k) / g**(k + 1))(g)
        bs.append(b)
        streams.append((_law_stream(F, law, f'f_{j + 1}', 0), ))
    return FamilyData(spec, Poly.constant(1), z, tuple(bs), tuple(streams))


def _laguerre_delta(spec: FamilySpec) -> FamilyData:
    z = Poly.x()
    g = spec.gamma[0]
    bs, streams = [], []
    for j, dl in enumerate(spec.delta):
        b = -g * z + dl
        F = FirstOrderData((z, Poly.constant(1)), b)
        law = (lambda dl: lambda k: pochhammer(1 + dl, k) / g**(k + 1))(dl)
        bs.append(b)
        streams.append((_law_stream(F, law, f'f_{j + 1}', 0), ))
    return FamilyData(spec, z, Poly.constant(1), tuple(bs), tuple(streams))


def _hermite(spec: FamilySpec) -> FamilyData:
    z = Poly.x()
    g = spec.gamma[0]
    one = Poly.constant(1)
    bs, streams = [], []
    for j, dl in enumerate(spec.delta):
        b = g * z + dl
        F = FirstOrderData((one, one), b)
        bs.append(b)
        streams.append((HolonomicStream(F, [1], label=f'f_{j + 1}', index=0), ))
    return FamilyData(spec, one, one, tuple(bs), tuple(streams))


def _lerch(spec: FamilySpec) -> FamilyData:
    z = Poly.x()
    a2 = product(z - x for x in spec.alpha)
    bs, streams = [], []
    for j, g in enumerate(spec.gamma):
        b = a2 * g
        F = FirstOrderData((z, a2), b)
        row = []
        for i, x in enumerate(spec.alpha):
            law = (lambda x, g: lambda k: x**(k + 1) / (k + 1 + g))(x, g)
            row.append(_law_stream(F, law, f'f_{i + 1},{j + 1}', i))
        bs.append(b)
        streams.append(tuple(row))
    return FamilyData(spec, z, a2, tuple(bs), tuple(streams))


def _custom(spec: FamilySpec) -> FamilyData:
    a1 = (spec.a1 if spec.a1 is not None else Poly.constant(1)).relabel('z')
    a2 = spec.a.relabel('z').exact_div(a1)
    streams = []
    for j, b in enumerate(spec.b):
        F = FirstOrderData((a1, a2), b)
        # the assumption is checked by the construction, after P != 0
        streams.append(tuple(solution_basis(F, check=False, label=f'f_{j + 1}')))
    return FamilyData(spec, a1, a2, tuple(p.relabel('z') for p in spec.b), tuple(streams))
#endregion


_BUILDERS = {
    'chebyshev': _chebyshev,
    'bessel': _bessel,
    'laguerre-gamma': _laguerre_gamma,
    'laguerre-delta': _laguerre_delta,
    'hermite': _hermite,
    'lerch': _lerch,
    'custom': _custom,
}


def family_streams(spec: FamilySpec) -> FamilyData:
    data = _BUILDERS[spec.family](spec)
    log.debug(f'{spec.family}: d = {data.d}, W = {data.W}, a_1 = {data.a1}, a_2 = {data.a2}')
    return data


if __name__ == '__main__':
    fam = family_streams(FamilySpec('chebyshev', u=2))
    s = fam.streams[0][0]
    assert s.prefix(5) == (1, 0, Fraction(1, 2), 0, Fraction(3, 8))
    bes = family_streams(FamilySpec('bessel', gamma=(0, )))
    assert bes.streams[0][0][3] == Fraction(1, 24)
    print('Passed')
