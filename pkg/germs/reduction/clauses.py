"""
The supported reduction clauses: for each (order ``k``, target degree ``t``) pair, the monomials which survive a
reduction step and the constant coefficient differential operators which predict their coefficients.

Operators are stored as polynomials in ``(∂x, ∂y)`` - written with ``x`` standing for ``∂x`` and ``y`` for ``∂y`` -
and applied with :func:`.apply_operator`. A residual coefficient is ``normalization * (operator applied to rho)``,
which is a rational number because each operator has order ``t``.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Dict, List, Tuple

from germs.exceptions import NotHomogeneousError, UnsupportedReduction
from germs.harmonic import derivative
from germs.poly import Monomial, Poly

log = logging.getLogger(__name__)

_X, _Y = Poly.x(), Poly.y()
_LAPLACE = _X ** 2 + _Y ** 2


@dataclass(frozen=True)
class ResidualClause:
    k: int
    t: int
    clause: str
    monomials: Tuple[Monomial, ...]
    operators: Tuple[Poly, ...]
    normalizations: Tuple[Fraction, ...]
    operator_labels: Tuple[str, ...]
    notes: Tuple[str, ...] = field(default=())
    statement: str = ''
    """Published label of the clause, reported as ``paper_clause``, e.g. ``Thm1.4(3)``"""
    statement_id: str = ''
    """Identifier accepted by ``verify --theorem``, e.g. ``1.4.3``"""

    @property
    def terms(self) -> List[Tuple[Monomial, Poly, Fraction, str]]:
        return list(zip(self.monomials, self.operators, self.normalizations, self.operator_labels))


def _norm(*facts: int) -> Fraction:
    den = 1
    for f in facts:
        den *= factorial(f)
    return Fraction(1, den)


CLAUSES = {
    (5, 6): ResidualClause(
        5, 6, 'h5-deg6',
        monomials=(Monomial(6, 0),),
        operators=(_LAPLACE ** 3,),
        normalizations=(_norm(6),),
        operator_labels=('Δ³',),
        statement='Thm1.2(2)', statement_id='1.2',
    ),
    (6, 7): ResidualClause(
        6, 7, 'h6-deg7',
        monomials=(Monomial(7, 0), Monomial(6, 1)),
        operators=(_X * _LAPLACE ** 3, _Y * _LAPLACE ** 3),
        normalizations=(_norm(7), _norm(6, 1)),
        operator_labels=('∂xΔ³', '∂yΔ³'),
        notes=('the x^6*y normalization 1/(6!1!) equals 7/7!',),
        statement='Thm1.3(2)', statement_id='1.3.2',
    ),
    (6, 8): ResidualClause(
        6, 8, 'h6-deg8',
        monomials=(Monomial(8, 0),),
        operators=(_LAPLACE ** 4,),
        normalizations=(_norm(8),),
        operator_labels=('Δ⁴',),
        statement='Thm1.3(3)', statement_id='1.3.3',
    ),
    (7, 8): ResidualClause(
        7, 8, 'h7-deg8',
        monomials=(Monomial(8, 0), Monomial(7, 1), Monomial(6, 2)),
        operators=(
            (_X ** 2 - 3 * _Y ** 2) * _LAPLACE ** 3,
            _X * _Y * _LAPLACE ** 3,
            _Y ** 2 * _LAPLACE ** 3,
        ),
        normalizations=(_norm(8), _norm(7), _norm(6, 2)),
        operator_labels=('(∂xx - 3∂yy)Δ³', '∂xyΔ³', '∂yyΔ³'),
        statement='Thm1.4(2)', statement_id='1.4.2',
    ),
    (7, 9): ResidualClause(
        7, 9, 'h7-deg9',
        monomials=(Monomial(9, 0), Monomial(8, 1)),
        operators=(_X * _LAPLACE ** 4, _Y * _LAPLACE ** 4),
        normalizations=(_norm(9), _norm(8, 1)),
        operator_labels=('∂xΔ⁴', '∂yΔ⁴'),
        notes=('reduced over g7; a stated leading term f7 at this degree is read as g7',),
        statement='Thm1.4(3)', statement_id='1.4.3',
    ),
    (7, 10): ResidualClause(
        7, 10, 'h7-deg10',
        monomials=(Monomial(10, 0),),
        operators=(_LAPLACE ** 5,),
        normalizations=(_norm(10),),
        operator_labels=('Δ⁵',),
        statement='Thm1.4(4)', statement_id='1.4.4',
    ),
}   # type: Dict[Tuple[int, int], ResidualClause]


def get_clause(k: int, t: int) -> ResidualClause:
    """
    :raises UnsupportedReduction: ``(k, t)`` isn't one of the supported pairs
    """
    try:
        return CLAUSES[(k, t)]
    except KeyError:
        supported = ', '.join(f'({a}, {b})' for a, b in sorted(CLAUSES))
        raise UnsupportedReduction(f'No reduction clause for order {k} at degree {t} (supported: {supported})')


def clause_id(k: int, t: int) -> str:
    return get_clause(k, t).clause


def residual_monomials(k: int, t: int) -> List[Monomial]:
    return list(get_clause(k, t).monomials)


def apply_operator(op: Poly, p: Poly) -> Poly:
    """Apply the constant coefficient operator ``sum c_ab ∂x^a ∂y^b`` (stored as ``sum c_ab x^a y^b``) to ``p``"""
    out = Poly.zero()
    for m, c in op.terms:
        out = out + derivative(p, m.ex, m.ey).scale(c)
    return out


def residual_formula(k: int, t: int, rho: Poly) -> List[Tuple[Monomial, Fraction]]:
    """
    Evaluate the clause operators on the degree ``t`` homogeneous polynomial ``rho``.

    :raises NotHomogeneousError: ``rho`` has a term of degree other than ``t``
    """
    clause = get_clause(k, t)
    if not rho.is_homogeneous(t):
        raise NotHomogeneousError(f'Residual formula for ({k}, {t}) needs a homogeneous polynomial of degree {t}')
    return [(m, apply_operator(op, rho).constant_term * norm) for m, op, norm, _ in clause.terms]
