"""
Exact linear algebra over the rationals, as used by the harmonic sampler, the reduction solver and the
determinacy rank checks.

Matrices are passed around as plain row-major lists of :class:`fractions.Fraction` (which is what the rest of the
package stores), and converted to :class:`sympy.Matrix` of :class:`sympy.Rational` only for the elimination itself.
Pivots are taken left to right, so every basis / witness produced here is deterministic in the column order the
caller chose.
"""
import logging
from fractions import Fraction
from typing import List, Optional, Sequence

from sympy import Matrix, Rational

from germs.exceptions import ReductionInvariantError

log = logging.getLogger(__name__)

Vector = List[Fraction]
Rows = Sequence[Sequence]


def to_rational(c) -> Rational:
    c = Fraction(c)
    return Rational(c.numerator, c.denominator)


def to_fraction(r) -> Fraction:
    r = Rational(r)
    return Fraction(int(r.p), int(r.q))


def to_matrix(rows: Rows, cols: int = None) -> Matrix:
    """Build a sympy matrix from row-major data. ``cols`` is needed to keep the shape of a matrix with no rows."""
    rows = [list(r) for r in rows]
    if not rows:
        return Matrix.zeros(0, cols or 0)
    return Matrix([[to_rational(c) for c in r] for r in rows])


def from_matrix(m: Matrix) -> List[Vector]:
    return [[to_fraction(m[i, j]) for j in range(m.cols)] for i in range(m.rows)]


def transpose(rows: Rows) -> List[list]:
    return [list(col) for col in zip(*rows)]


def rank(rows: Rows) -> int:
    m = to_matrix(rows)
    if m.rows == 0 or m.cols == 0:
        return 0
    return m.rank()


def nullspace(rows: Rows, cols: int = None) -> List[Vector]:
    """Basis of ``{v : rows @ v = 0}``, one free column per vector, in pivot order"""
    m = to_matrix(rows, cols)
    if m.rows == 0:
        n = m.cols
        return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    return [[to_fraction(c) for c in v] for v in m.nullspace()]


def inverse(rows: Rows) -> List[Vector]:
    """
    Exact inverse of a square matrix.

    :raises ReductionInvariantError: the matrix is singular
    """
    m = to_matrix(rows)
    if m.rows != m.cols or m.rank() < m.rows:
        log.error('Attempted to invert a singular %dx%d matrix', m.rows, m.cols)
        raise ReductionInvariantError(f'Matrix of shape {m.rows}x{m.cols} is not invertible')
    return from_matrix(m.inv())


def mat_vec(rows: Rows, v: Sequence) -> Vector:
    return [sum((Fraction(a) * Fraction(b) for a, b in zip(r, v)), Fraction(0)) for r in rows]


def solve(rows: Rows, b: Sequence) -> Vector:
    """
    The unique solution of ``rows @ v = b``.

    :raises ReductionInvariantError: the system is inconsistent or under-determined
    """
    m, rhs = to_matrix(rows), Matrix([to_rational(c) for c in b])
    aug = m.row_join(rhs)
    r, r_aug = m.rank(), aug.rank()
    if r != r_aug:
        log.error('Inconsistent %dx%d system (rank %d, augmented rank %d)', m.rows, m.cols, r, r_aug)
        raise ReductionInvariantError(f'Linear system is inconsistent (rank {r} < augmented rank {r_aug})')
    if r != m.cols:
        log.error('Under-determined %dx%d system (rank %d)', m.rows, m.cols, r)
        raise ReductionInvariantError(f'Linear system has no unique solution (rank {r} < {m.cols} unknowns)')
    reduced, pivots = aug.rref()
    return [to_fraction(reduced[i, m.cols]) for i in range(len(pivots))]


def in_span(vectors: Rows, v: Sequence) -> bool:
    """``True`` if ``v`` lies in the span of ``vectors``"""
    vectors = [list(u) for u in vectors if any(u)]
    if not any(v):
        return True
    if not vectors:
        return False
    return rank(vectors + [list(v)]) == rank(vectors)


def first_outside_span(vectors: Rows, dim: int) -> Optional[int]:
    """Index of the first standard basis vector ``e_i`` (``i < dim``) outside the span, or ``None`` if they span"""
    basis = [list(u) for u in vectors if any(u)]
    current = rank(basis)
    for i in range(dim):
        e = [Fraction(int(i == j)) for j in range(dim)]
        if current == 0 or rank(basis + [e]) > current:
            return i
    return None
