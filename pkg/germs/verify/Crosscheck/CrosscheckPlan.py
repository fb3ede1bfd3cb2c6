import logging
from collections import Counter

import numpy as np

from germs.grammar import format_monomial
from germs.harmonic import SampleSpec, sample_homogeneous
from germs.reduction import CLAUSES, HAND_TABLES, crosscheck_hand_diffeo
from germs.verify.base import BasePlan, TrialOutcome

log = logging.getLogger(__name__)

PAIRS = {f'crosscheck-{c.clause}': (k, t) for (k, t), c in CLAUSES.items()}

STRICT = ('crosscheck-h5-deg6',)
"""Clauses whose hand table must agree with the solver exactly"""


class CrosscheckPlan(BasePlan):
    provides = list(PAIRS)
    statements = {f'crosscheck-{c.clause}': (None, c.statement) for c in CLAUSES.values()}

    def __init__(self, clause: str, **kwargs):
        super().__init__(clause, **kwargs)
        self.k, self.t = PAIRS[clause]
        self.strict = clause in STRICT

    @property
    def jet_order(self) -> int:
        return self.t

    def trial(self, index: int, rng: np.random.Generator) -> TrialOutcome:
        rho = sample_homogeneous(SampleSpec(self.t, coefficient_bound=self.coefficient_bound), rng)
        check = crosscheck_hand_diffeo(self.k, self.t, rho)
        detail = dict(agrees=check.agrees, monomials=[format_monomial(m) for m, _, _ in check.discrepancies])
        if check.agrees:
            return TrialOutcome(index, 0, ok=True, input=str(rho), detail=detail)
        message = ', '.join(f'{format_monomial(m)}: table {hand} solver {solver}'
                            for m, hand, solver in check.discrepancies)
        return TrialOutcome(index, 0, ok=not self.strict, input=str(rho), message=message, detail=detail)

    def summarize(self, outcomes) -> str:
        agreed = sum(1 for o in outcomes if o.detail.get('agrees'))
        return f'{agreed}/{len(outcomes)} hand-table jets agree with the solver'

    def extra_notes(self, outcomes):
        notes = list(HAND_TABLES[(self.k, self.t)].defects)
        counts = Counter(m for o in outcomes for m in o.detail.get('monomials', []))
        if counts:
            listed = ', '.join(f'{m} ({n})' for m, n in sorted(counts.items()))
            notes.append(f'discrepancy report, monomial (trials): {listed}')
        return notes
