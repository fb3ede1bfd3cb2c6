import numpy as np

from germs.conformal import LinearMap2, compose_linear
from germs.determinacy import check_inclusion, determinacy_bound
from germs.harmonic import HarmonicKind, harmonic_generator
from germs.verify.base import BasePlan, TrialOutcome

ORDERS = (3, 4, 5, 6, 7)


class DeterminacyPlan(BasePlan):
    provides = ['determinacy']
    statements = {'determinacy': ('prop2.4', 'Prop2.4')}
    noun = 'inclusion certificates unchanged by linear coordinate changes'

    @property
    def jet_order(self) -> int:
        return 2 * max(ORDERS) - 3

    def _linear_map(self, rng: np.random.Generator) -> LinearMap2:
        b = self.coefficient_bound
        while True:
            a, bb, c, d = (int(v) for v in rng.integers(-b, b, size=4, endpoint=True))
            if a * d - bb * c != 0:
                return LinearMap2(((a, bb), (c, d)))

    def trial(self, index: int, rng: np.random.Generator) -> TrialOutcome:
        k = int(rng.choice(ORDERS))
        L = self._linear_map(rng)
        fk = harmonic_generator(k, HarmonicKind.F)
        moved = compose_linear(fk, L)
        label = f'f{k} o ' + '; '.join(' '.join(str(v) for v in row) for row in L.entries)
        for degree in sorted({max(k, 2 * k - 4), 2 * k - 3}):
            before, after = check_inclusion(fk, degree), check_inclusion(moved, degree)
            if (before.holds, before.rank) != (after.holds, after.rank):
                return TrialOutcome(
                    index, 0, ok=False, input=label,
                    message=f'degree {degree}: rank {before.rank} became {after.rank}',
                )
        return TrialOutcome(index, 0, ok=True, input=label)

    def extra_notes(self, outcomes):
        notes = []
        for k in range(1, 8):
            report = determinacy_bound(k)
            notes.append(f'f{k}: bound {report.bound}, certified at {report.certified_bound}')
        return notes
