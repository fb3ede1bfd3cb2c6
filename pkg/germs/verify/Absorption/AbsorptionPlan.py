import numpy as np

from germs.harmonic import SampleSpec, sample_l_harmonic
from germs.reduction import clause_leading, reduce_step, residual_formula
from germs.verify.base import BasePlan, TrialOutcome

TAILS = {
    'absorb-h5': (5, ((6, 3),)),
    'absorb-h6': (6, ((7, 3), (8, 4))),
    'absorb-h7': (7, ((8, 3), (9, 4), (10, 5))),
}


class AbsorptionPlan(BasePlan):
    provides = list(TAILS)
    statements = {
        'absorb-h5': ('cor1.5', 'Cor1.5'),
        'absorb-h6': ('cor1.6', 'Cor1.6'),
        'absorb-h7': ('cor1.7', 'Cor1.7'),
    }
    noun = 'polyharmonic tails absorbed'

    def __init__(self, clause: str, **kwargs):
        super().__init__(clause, **kwargs)
        self.k, self.tails = TAILS[clause]

    @property
    def jet_order(self) -> int:
        return max(t for t, _ in self.tails)

    def trial(self, index: int, rng: np.random.Generator) -> TrialOutcome:
        leading = clause_leading(self.k)
        inputs = []
        for t, l in self.tails:
            rho = sample_l_harmonic(
                SampleSpec(t, harmonicity=l, coefficient_bound=self.coefficient_bound), rng
            )
            inputs.append(str(rho))
            step = reduce_step(leading, rho, t)
            left = [(m, c) for m, c in step.residual if c != 0]
            if left or any(c != 0 for _, c in residual_formula(self.k, t, rho)):
                return TrialOutcome(
                    index, 0, ok=False, input=str(rho),
                    message=f'Δ^{l}-harmonic tail of degree {t} left residual {step.residual_poly}',
                )
        return TrialOutcome(index, 0, ok=True, input='; '.join(inputs))
