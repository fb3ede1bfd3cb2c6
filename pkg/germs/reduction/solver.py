"""
The infinitesimal-action solver: finds a perturbation of the identity ``id + (P, Q)`` which removes every
non-residual monomial of a target degree ``t`` sitting above a harmonic leading term.

For a leading term ``h`` of degree ``k`` and homogeneous ``(P, Q)`` of degree ``d = t - k + 1``, composing with
``id + (P, Q)`` changes the degree ``t`` component by exactly ``P*∂h/∂x + Q*∂h/∂y`` - every cross term lands above
``t``. :func:`action_matrix` is that linear map; :func:`reduce_step` solves it against the clause's residual
monomials and then checks the answer by full truncated composition.

    >>> from germs.harmonic import harmonic_generator, HarmonicKind
    >>> f5 = harmonic_generator(5, HarmonicKind.F)
    >>> reduce_step(f5, Poly.monomial(4, 2), 6).residual
    [(Monomial(ex=6, ey=0), Fraction(1, 5))]

"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import List, Optional, Tuple

from germs import linalg
from germs.exceptions import DegenerateLeadingTerm, ReductionInvariantError, UnsupportedReduction
from germs.harmonic import HarmonicKind, harmonic_generator, partial_x, partial_y
from germs.poly import DiffeoJet, Monomial, Poly, compose_truncated, homogeneous_monomials, jet_equal
from germs.reduction.clauses import apply_operator, get_clause, residual_formula

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class ActionMatrix:
    """
    Rows indexed by the degree ``t`` monomials, columns by ``(coordinate, monomial)`` pairs: first every degree
    ``d`` monomial of the x-coordinate perturbation, then every one of the y-coordinate perturbation.
    """
    leading: Poly
    t: int
    rows: Tuple[Tuple[Fraction, ...], ...]
    row_monomials: Tuple[Monomial, ...]
    columns: Tuple[Tuple[str, Monomial], ...]

    @property
    def shape(self) -> Tuple[int, int]:
        return len(self.row_monomials), len(self.columns)

    @property
    def rank(self) -> int:
        return _rank(self.rows)

    def column(self, coordinate: str, m: Monomial) -> List[Fraction]:
        j = self.columns.index((coordinate, m))
        return [row[j] for row in self.rows]


@lru_cache(maxsize=None)
def _rank(rows) -> int:
    return linalg.rank(rows)


def leading_kind(leading: Poly) -> Optional[HarmonicKind]:
    """``F`` or ``G`` when ``leading`` is exactly ``f_k`` / ``g_k``, otherwise ``None``"""
    if leading.is_zero or not leading.is_homogeneous():
        return None
    k = int(leading.degree)
    if k < 1:
        return None
    for kind in HarmonicKind:
        if leading == harmonic_generator(k, kind):
            return kind
    return None


def action_matrix(leading: Poly, t: int) -> ActionMatrix:
    """
    Matrix of ``(P, Q) -> P*∂h/∂x + Q*∂h/∂y`` on homogeneous ``(P, Q)`` of degree ``t - k + 1``.

    :raises DegenerateLeadingTerm: ``leading`` is zero, not homogeneous, or has a zero gradient
    :raises UnsupportedReduction:  ``t <= k``
    """
    if leading.is_zero or not leading.is_homogeneous():
        raise DegenerateLeadingTerm('Leading term must be a non-zero homogeneous polynomial')
    k = int(leading.degree)
    if t <= k:
        raise UnsupportedReduction(f'Target degree {t} must exceed the leading order {k}')
    grad = (('x', partial_x(leading)), ('y', partial_y(leading)))
    if all(g.is_zero for _, g in grad):
        raise DegenerateLeadingTerm(f'Leading term {leading} has a zero gradient')
    d = t - k + 1
    columns, vectors = [], []
    for coordinate, g in grad:
        for m in homogeneous_monomials(d):
            columns.append((coordinate, m))
            vectors.append((Poly.monomial(m.ex, m.ey) * g).vector(t))
    rows = tuple(tuple(r) for r in linalg.transpose(vectors))
    return ActionMatrix(leading, t, rows, tuple(homogeneous_monomials(t)), tuple(columns))


@lru_cache(maxsize=None)
def _system_inverse(leading: Poly, t: int) -> Tuple[Tuple[Fraction, ...], ...]:
    """Inverse of ``[A | -E_R]``, where ``E_R`` holds one unit column per residual monomial"""
    k = int(leading.degree)
    A = action_matrix(leading, t)
    residual = get_clause(k, t).monomials
    system = [
        list(row) + [Fraction(-1) if A.row_monomials[i] == m else Fraction(0) for m in residual]
        for i, row in enumerate(A.rows)
    ]
    return tuple(tuple(r) for r in linalg.inverse(system))


@dataclass(frozen=True)
class ReductionReport:
    """
    One reduction step at degree ``target_degree``: the solved coordinate change ``phi``, the coefficients left on
    the clause's residual monomials, and whether they agree with the clause's operator formulas.
    """
    kind: HarmonicKind
    k: int
    target_degree: int
    clause: str
    phi: DiffeoJet
    residual: List[Tuple[Monomial, Fraction]]
    formula: List[Tuple[Monomial, Fraction]]
    formula_check: bool
    rank: int
    result: Poly
    notes: List[str] = field(default_factory=list)
    statement: str = ''

    @property
    def jet_order(self) -> int:
        return self.target_degree

    @property
    def residual_poly(self) -> Poly:
        return Poly(self.residual)


def reduce_step(leading: Poly, tail: Poly, t: int) -> ReductionReport:
    """
    Remove every non-residual monomial from the degree ``t`` component of ``leading + tail``.

    ``leading`` must be ``f_k`` or ``g_k`` for a supported order ``k``, and ``tail`` must have order above ``k``.
    Only ``homogeneous_component(tail, t)`` is reduced; lower degree terms of the tail can't reach degree ``t``
    through a perturbation of degree ``t - k + 1``.

    :raises UnsupportedReduction:   leading term isn't a generator, unsupported ``(k, t)``, or tail order too low
    :raises ReductionInvariantError: the composed germ disagrees with the linear solution
    """
    kind = leading_kind(leading)
    if kind is None:
        raise UnsupportedReduction(f'Leading term {leading} is not one of the harmonic generators f_k / g_k')
    k = int(leading.degree)
    clause = get_clause(k, t)
    if not tail.is_zero and tail.order <= k:
        raise UnsupportedReduction(f'Tail must have order above {k}, got order {tail.order}')

    rho = tail.homogeneous_component(t)
    inv = _system_inverse(leading, t)
    solution = linalg.mat_vec(inv, [-c for c in rho.vector(t)])
    d = t - k + 1
    n = d + 1
    P = Poly.from_vector(solution[:n], d)
    Q = Poly.from_vector(solution[n:2 * n], d)
    residual = list(zip(clause.monomials, solution[2 * n:]))

    phi = DiffeoJet.perturbation(P, Q, t)
    before = leading + tail
    result = compose_truncated(before, phi, t).body
    expected = Poly(residual)
    if result.homogeneous_component(t) != expected:
        log.error('Composition at degree %d over %s gave %s, linear model predicted %s',
                  t, leading, result.homogeneous_component(t), expected)
        raise ReductionInvariantError(f'Reduction of degree {t} over {leading} left non-residual monomials')
    if not jet_equal(result, before, t - 1):
        log.error('Reduction at degree %d over %s disturbed lower degrees', t, leading)
        raise ReductionInvariantError(f'Reduction of degree {t} over {leading} changed the {t - 1}-jet')

    formula = residual_formula(k, t, rho)
    check = formula == residual
    if not check:
        log.warning('Residual %s for clause %s differs from the operator formula %s', residual, clause.clause, formula)
    log.debug('Reduced degree %d over %s: residual %s', t, leading, residual)
    return ReductionReport(
        kind=kind, k=k, target_degree=t, clause=clause.clause, phi=phi, residual=residual, formula=formula,
        formula_check=check, rank=_rank(action_matrix(leading, t).rows), result=result, notes=list(clause.notes),
        statement=clause.statement,
    )


def clause_leading(k: int) -> Poly:
    return harmonic_generator(k, HarmonicKind.F if k == 5 else HarmonicKind.G)


@lru_cache(maxsize=None)
def pinned_functional(k: int, t: int) -> Tuple[Tuple[Fraction, ...], ...]:
    """
    The residual map read off the solver: row ``i`` holds the coefficient left on the ``i``-th residual monomial
    when the tail is each degree ``t`` basis monomial in turn.
    """
    leading = clause_leading(k)
    columns = [
        [c for _, c in reduce_step(leading, Poly.monomial(m.ex, m.ey), t).residual]
        for m in homogeneous_monomials(t)
    ]
    return tuple(tuple(r) for r in linalg.transpose(columns))


@dataclass(frozen=True)
class OperatorCheck:
    monomial: Monomial
    operator: Poly
    label: str
    normalization: Fraction
    stated: Tuple[Fraction, ...]
    pinned: Tuple[Fraction, ...]
    corrected: Optional[Poly] = None

    @property
    def matches(self) -> bool:
        return self.stated == self.pinned


@dataclass(frozen=True)
class OperatorVerdict:
    k: int
    t: int
    clause: str
    checks: Tuple[OperatorCheck, ...]

    @property
    def matches(self) -> bool:
        return all(c.matches for c in self.checks)


def verify_operators(k: int, t: int) -> OperatorVerdict:
    """
    Compare each clause operator (times its normalization) against :func:`pinned_functional` on every degree ``t``
    basis monomial. On a mismatch, the operator which *would* reproduce the solver is attached as ``corrected``:
    since ``∂x^a ∂y^b`` sends ``x^a y^b`` to ``a!b!`` and every other degree ``t`` monomial to zero, that's
    ``sum r_ab / (a! b! * normalization) * ∂x^a ∂y^b``.
    """
    clause = get_clause(k, t)
    pinned = pinned_functional(k, t)
    basis = homogeneous_monomials(t)
    checks = []
    for i, (m, op, norm, label) in enumerate(clause.terms):
        stated = tuple(apply_operator(op, Poly.monomial(b.ex, b.ey)).constant_term * norm for b in basis)
        corrected = None
        if stated != pinned[i]:
            corrected = Poly({
                b: r / (factorial(b.ex) * factorial(b.ey) * norm) for b, r in zip(basis, pinned[i])
            })
            log.warning('Operator %s for %s on %s disagrees with the solver; corrected operator %s',
                        label, clause.clause, m, corrected)
        checks.append(OperatorCheck(m, op, label, norm, stated, pinned[i], corrected))
    return OperatorVerdict(k, t, clause.clause, tuple(checks))
