import zlib
from fractions import Fraction
from pathlib import Path

import numpy as np
import pytest

from holopade.core.poly import Poly
from holopade.weyl.diffop import DiffOp, from_polys

DATA = Path(__file__).parent / 'data'


@pytest.fixture
def rng(request):
    # one reproducible stream per test
    return np.random.default_rng(zlib.crc32(request.node.name.encode()))


def random_fraction(rng, bound: int = 6) -> Fraction:
    den = int(rng.integers(1, 4))
    return Fraction(int(rng.integers(-bound, bound + 1)), den)


def random_poly(rng, max_degree: int = 4, var: str = 'z') -> Poly:
    degree = int(rng.integers(0, max_degree + 1))
    return Poly([random_fraction(rng) for _ in range(degree + 1)], var)


def random_operator(rng, max_order: int = 2, max_degree: int = 3) -> DiffOp:
    order = int(rng.integers(0, max_order + 1))
    return from_polys([random_poly(rng, max_degree) for _ in range(order + 1)])


@pytest.fixture
def z():
    return Poly.x()
