"""Exact linear algebra over Q and Q[z]."""
import logging
from fractions import Fraction
from typing import Callable, Sequence, TypeVar

from .numbers import RationalLike, to_rational
from .poly import Poly

log = logging.getLogger()

T = TypeVar('T')


def _bareiss(rows: list[list[T]], one: T, is_zero: Callable[[T], bool],
             exact_div: Callable[[T, T], T]) -> T:
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError('determinant of a non-square matrix')
    if n == 0:
        return one
    m = [list(r) for r in rows]
    sign = 1
    prev = one
    for k in range(n - 1):
        if is_zero(m[k][k]):
            swap = next((i for i in range(k + 1, n) if not is_zero(m[i][k])), None)
            if swap is None:
                return one - one
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = exact_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev)
        prev = m[k][k]
    return m[n - 1][n - 1] if sign > 0 else -m[n - 1][n - 1]


def det_exact(matrix: Sequence[Sequence[RationalLike]]) -> Fraction:
    """Fraction-free (Bareiss) determinant of a rational matrix."""
    rows = [[to_rational(x) for x in r] for r in matrix]
    return _bareiss(rows, Fraction(1), lambda x: x == 0, lambda a, b: a / b)


def det_poly(matrix: Sequence[Sequence[Poly]]) -> Poly:
    """Bareiss determinant over Q[z]; every division is exact."""
    rows = [list(r) for r in matrix]
    var = next((p.var for r in rows for p in r if not p.is_constant()), 'z')
    return _bareiss(rows, Poly.constant(1, var), lambda p: p.is_zero(), lambda a, b: a.exact_div(b))


def rref(matrix: Sequence[Sequence[RationalLike]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form with leftmost pivots; returns (rows, pivot columns)."""
    m = [[to_rational(x) for x in r] for r in matrix]
    ncols = len(m[0]) if m else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def kernel_basis(matrix: Sequence[Sequence[RationalLike]], ncols: int) -> list[list[Fraction]]:
    """Basis of the right nullspace, one vector per free column (ascending)."""
    rows, pivots = rref(matrix) if matrix else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, pc in zip(rows, pivots):
            v[pc] = -row[f]
        basis.append(v)
    return basis


def kernel_vector(matrix: Sequence[Sequence[RationalLike]], ncols: int) -> list[Fraction]:
    """The kernel vector whose highest-index free variable is 1 and the other free ones 0."""
    basis = kernel_basis(matrix, ncols)
    if not basis:
        raise ValueError('the nullspace is trivial')
    log.debug(f'nullspace of dimension {len(basis)} in {ncols} unknowns')
    return basis[-1]


def rank(matrix: Sequence[Sequence[RationalLike]]) -> int:
    return len(rref(matrix)[1]) if matrix else 0


if __name__ == '__main__':
    assert det_exact([[1, 2], [3, 4]]) == -2
    assert det_exact([[1, 1, 1, 1], [1, 2, 4, 8], [1, 3, 9, 27], [1, 4, 16, 64]]) == 12
    assert kernel_vector([[1, 1]], 2) == [-1, 1]
    print('Passed')
