import logging

import numpy as np

from germs.harmonic import SampleSpec, sample_homogeneous
from germs.poly import Poly
from germs.reduction import CLAUSES, clause_leading, full_reduce, residual_formula, verify_operators
from germs.verify.base import BasePlan, TrialOutcome

log = logging.getLogger(__name__)

PAIRS = {c.clause: (k, t) for (k, t), c in CLAUSES.items()}


class ResidualPlan(BasePlan):
    """
    Reduces ``f5 + rho`` (order 5) or ``g_k + rho`` (orders 6 and 7) through every degree up to the clause's and
    compares the normal form with ``leading + sum formula(rho) * residual monomial``.
    """

    provides = list(PAIRS)
    statements = {c.clause: (c.statement_id, c.statement) for c in CLAUSES.values()}

    def __init__(self, clause: str, **kwargs):
        super().__init__(clause, **kwargs)
        self.k, self.t = PAIRS[clause]

    @property
    def jet_order(self) -> int:
        return self.t

    def trial(self, index: int, rng: np.random.Generator) -> TrialOutcome:
        rho = sample_homogeneous(SampleSpec(self.t, coefficient_bound=self.coefficient_bound), rng)
        leading = clause_leading(self.k)
        result = full_reduce(leading + rho, self.k, self.t)
        expected = leading + Poly(residual_formula(self.k, self.t, rho))
        if result.normal_form != expected:
            return TrialOutcome(
                index, 0, ok=False, input=str(rho),
                message=f'normal form {result.normal_form} but the formula predicts {expected}',
            )
        if not all(s.formula_check for s in result.steps):
            return TrialOutcome(index, 0, ok=False, input=str(rho), message='a reduction step failed its formula check')
        return TrialOutcome(index, 0, ok=True, input=str(rho))

    def summarize(self, outcomes) -> str:
        labels = ', '.join(CLAUSES[(self.k, self.t)].operator_labels)
        passed = sum(1 for o in outcomes if o.ok)
        return f'{passed}/{len(outcomes)} residuals match {labels} formula'

    def operator_verdict(self):
        return verify_operators(self.k, self.t)

    def extra_notes(self, outcomes):
        notes = list(CLAUSES[(self.k, self.t)].notes)
        verdict = verify_operators(self.k, self.t)
        if not verdict.matches:
            notes.append('operator formula disagrees with the solver; see operator_verdict for the corrected operators')
        return notes
