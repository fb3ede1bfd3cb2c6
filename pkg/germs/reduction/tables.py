"""
Hand-derived coordinate changes for each reduction clause, kept as coefficient tables so they can be checked
against the solver.

Each table gives the perturbation ``(P, Q)`` of ``id + (P, Q)`` for a tail ``rho = sum a_j x^(t-j) y^j``: for every
monomial of ``P`` and ``Q`` a map ``{j: weight}`` so that the monomial's coefficient is ``sum weight * a_j``.

The printed tables these were typed from contain typesetting defects. Where a reading had to be chosen, the
table holds that reading and ``defects`` says which one it is - :func:`crosscheck_hand_diffeo` then reports any
monomials where the table and the solver still disagree instead of failing.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Tuple

from germs.exceptions import NotHomogeneousError
from germs.poly import DiffeoJet, Monomial, Poly, compose_truncated
from germs.reduction.clauses import get_clause
from germs.reduction.solver import clause_leading, reduce_step

log = logging.getLogger(__name__)

Weights = Dict[int, Fraction]


def _w(**weights: str) -> Weights:
    """``_w(a2='1/25', a4='1/25')`` -> ``{2: Fraction(1, 25), 4: Fraction(1, 25)}``"""
    return {int(name[1:]): Fraction(v) for name, v in weights.items()}


def _neg(weights: Weights) -> Weights:
    return {j: -v for j, v in weights.items()}


@dataclass(frozen=True)
class HandTable:
    k: int
    t: int
    px: Dict[Monomial, Weights]
    py: Dict[Monomial, Weights]
    defects: Tuple[str, ...] = field(default=())

    @staticmethod
    def _instantiate(table: Dict[Monomial, Weights], a: List[Fraction]) -> Poly:
        return Poly({m: sum((w * a[j] for j, w in weights.items()), Fraction(0)) for m, weights in table.items()})

    def diffeo(self, rho: Poly) -> DiffeoJet:
        a = rho.vector(self.t)
        return DiffeoJet.perturbation(self._instantiate(self.px, a), self._instantiate(self.py, a), self.t)


M = Monomial

HAND_TABLES = {
    (5, 6): HandTable(
        5, 6,
        px={
            M(2, 0): _w(a6='1/5', a4='1/25', a2='1/25'),
            M(1, 1): _w(a5='1/20', a3='1/20', a1='1/20'),
            M(0, 2): _neg(_w(a6='1/5')),
        },
        py={
            M(2, 0): _w(a5='1/80', a3='1/80', a1='1/16'),
            M(1, 1): _neg(_w(a6='7/20', a4='3/50', a2='1/100')),
            M(0, 2): _neg(_w(a1='1/80', a3='1/80', a5='1/16')),
        },
    ),
    (6, 7): HandTable(
        6, 7,
        px={
            M(2, 0): _w(a3='1/48', a5='1/24', a7='5/16'),
            M(1, 1): _w(a2='5/336', a4='5/168', a6='19/336'),
            M(0, 2): _neg(_w(a7='1/6')),
        },
        py={
            M(2, 0): _w(a2='1/42', a4='1/70', a6='1/42'),
            M(1, 1): _neg(_w(a3='1/240', a5='1/24', a7='19/48')),
            M(0, 2): _neg(_w(a2='1/336', a4='1/168', a6='5/112')),
        },
    ),
    (6, 8): HandTable(
        6, 8,
        px={
            M(3, 0): _neg(_w(a1='5/768', a3='5/768', a5='1/256', a7='5/768')),
            M(2, 1): _w(a2='5/336', a4='5/168', a6='19/336', a8='5/12'),
            M(1, 2): _w(a1='25/768', a3='5/256', a5='25/768', a7='47/768'),
            M(0, 3): _neg(_w(a8='1/6')),
        },
        py={
            M(3, 0): _w(a2='1/42', a4='1/70', a6='1/42', a8='1/6'),
            M(2, 1): _w(a1='47/768', a3='25/768', a5='5/256', a7='25/768'),
            M(1, 2): _neg(_w(a8='5/12', a6='5/112', a4='1/168', a2='1/336')),
            M(0, 3): _neg(_w(a1='5/768', a3='1/256', a5='5/768', a7='35/768')),
        },
        defects=(
            'y-coordinate x^2*y group has a doubled "+ +" before the a7 term; read as a single "+"',
        ),
    ),
    (7, 8): HandTable(
        7, 8,
        px={
            M(2, 0): _w(a3='5/448', a5='3/224', a7='15/448'),
            M(1, 1): _neg(_w(a4='1/490', a6='3/98', a8='3/7')),
            M(0, 2): _neg(_w(a3='3/3136', a5='5/1568', a7='15/448')),
        },
        py={
            M(2, 0): _neg(_w(a4='3/245', a6='2/49', a8='3/7')),
            M(1, 1): _neg(_w(a3='9/1568', a5='15/784', a7='13/224')),
            M(0, 2): _w(a8='1/7'),
        },
        defects=(
            'the accompanying congruence is written over g6 with a degree 7 tail; it is read over g7 with the '
            'degree 8 tail',
        ),
    ),
    (7, 9): HandTable(
        7, 9,
        px={
            M(3, 0): _w(a3='5/448', a5='3/224', a7='15/448', a9='5/16'),
            M(2, 1): _w(a2='23/1344', a4='29/1568', a6='65/3136', a8='17/336'),
            M(1, 2): _neg(_w(a3='3/3136', a5='5/1568', a7='105/3136', a9='51/112')),
            M(0, 3): _neg(_w(a2='5/4032', a4='1/672', a6='5/1344', a8='5/144')),
        },
        py={
            M(3, 0): _w(a2='1/63', a4='1/147', a6='1/147', a8='1/63'),
            M(2, 1): _neg(_w(a3='9/1568', a5='15/784', a7='13/224', a9='33/56')),
            M(1, 2): _neg(_w(a2='5/672', a4='1/112', a6='5/224', a8='11/168')),
            M(0, 3): _w(a9='1/7'),
        },
        defects=(
            'the clause is stated over f7; the table is applied over g7 like the rest of the order 7 clauses',
        ),
    ),
    (7, 10): HandTable(
        7, 10,
        px={
            M(4, 0): _neg(_w(a1='9/256', a3='1/256', a5='3/1792', a7='3/1792', a9='1/256')),
            M(3, 1): _w(a2='23/1344', a4='29/1568', a6='65/3136', a8='17/336', a10='209/448'),
            M(2, 2): _w(a1='51/896', a3='3/128', a5='19/128', a7='3/128', a9='51/896'),
            M(1, 3): _neg(_w(a2='5/4032', a4='1/672', a6='5/4032', a8='5/144', a10='209/448')),
            M(0, 4): _neg(_w(a1='1/256', a3='3/1792', a5='3/1792', a7='1/256', a9='9/256')),
        },
        py={
            M(4, 0): _w(a2='1/63', a4='1/147', a6='1/147', a8='1/63', a10='1/7'),
            M(3, 1): _w(a1='61/896', a3='3/128', a5='9/896', a7='9/896', a9='3/128'),
            M(2, 2): _neg(_w(a2='5/672', a4='1/112', a6='5/224', a8='11/168', a10='21/32')),
            M(1, 3): _neg(_w(a1='3/128', a3='9/896', a5='9/896', a7='3/128', a9='61/896')),
            M(0, 4): _w(a10='1/7'),
        },
        defects=(
            'x-coordinate x^4 group closes its parenthesis before the a9 term; read as -(1/256)*a9*x^4',
            'y-coordinate x^4 group is missing a "+" between the a6 and a8 terms',
            'the x-coordinate has an unbalanced parenthesis',
        ),
    ),
}   # type: Dict[Tuple[int, int], HandTable]


@dataclass(frozen=True)
class HandCrosscheck:
    k: int
    t: int
    clause: str
    rho: Poly
    hand_phi: DiffeoJet
    solver_phi: DiffeoJet
    hand_jet: Poly
    solver_jet: Poly
    discrepancies: Tuple[Tuple[Monomial, Fraction, Fraction], ...]
    defects: Tuple[str, ...]

    @property
    def agrees(self) -> bool:
        return not self.discrepancies

    @property
    def phi_agrees(self) -> bool:
        return self.hand_phi == self.solver_phi

    @property
    def jet_order(self) -> int:
        return self.t


def crosscheck_hand_diffeo(k: int, t: int, rho: Poly) -> HandCrosscheck:
    """
    Compose the leading generator plus ``rho`` with both the hand table's coordinate change and the solver's, and
    list every degree ``t`` monomial where the two results differ as ``(monomial, hand, solver)``.

    :raises UnsupportedReduction: ``(k, t)`` is not a supported pair
    :raises NotHomogeneousError:  ``rho`` isn't homogeneous of degree ``t``
    """
    clause = get_clause(k, t)
    if not rho.is_homogeneous(t):
        raise NotHomogeneousError(f'Crosscheck for ({k}, {t}) needs a homogeneous tail of degree {t}')
    table = HAND_TABLES[(k, t)]
    leading = clause_leading(k)
    hand_phi = table.diffeo(rho)
    hand_jet = compose_truncated(leading + rho, hand_phi, t).body.homogeneous_component(t)
    step = reduce_step(leading, rho, t)
    solver_jet = step.result.homogeneous_component(t)

    monomials = sorted(set(hand_jet.monomials()) | set(solver_jet.monomials()), key=Monomial.sort_key)
    discrepancies = tuple((m, hand_jet[m], solver_jet[m]) for m in monomials if hand_jet[m] != solver_jet[m])
    if discrepancies:
        log.info('Hand table for %s disagrees with the solver on %d monomial(s)', clause.clause, len(discrepancies))
    return HandCrosscheck(
        k=k, t=t, clause=clause.clause, rho=rho, hand_phi=hand_phi, solver_phi=step.phi, hand_jet=hand_jet,
        solver_jet=solver_jet, discrepancies=discrepancies, defects=table.defects,
    )
