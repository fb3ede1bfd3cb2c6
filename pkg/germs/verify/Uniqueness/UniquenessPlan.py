from fractions import Fraction

import numpy as np

from germs.harmonic import HarmonicKind, SampleSpec, harmonic_generator, sample_homogeneous
from germs.poly import DiffeoJet, Poly, compose
from germs.reduction import full_reduce, uniqueness_check
from germs.verify.base import BasePlan, TrialOutcome


class UniquenessPlan(BasePlan):
    """
    Each trial draws a pair ``(c, c')``, equal half of the time, and checks :func:`.uniqueness_check` against
    ``c == c'``. It then moves ``f5 + c*x^6`` by a random ``id + (P, Q)`` with quadratic ``P, Q`` and checks that
    reducing it again gives back the same ``c``.
    """
    provides = ['uniqueness-h5']
    statements = {'uniqueness-h5': (None, 'Thm1.2(3)')}
    noun = 'modulus pairs classified correctly'

    @property
    def jet_order(self) -> int:
        return 6

    def _rational(self, rng: np.random.Generator) -> Fraction:
        b = self.coefficient_bound
        return Fraction(int(rng.integers(-b, b, endpoint=True)), int(rng.integers(1, b, endpoint=True)))

    def trial(self, index: int, rng: np.random.Generator) -> TrialOutcome:
        c = self._rational(rng)
        c_tilde = c if rng.random() < 0.5 else self._rational(rng)
        label = f'c={c}, c~={c_tilde}'
        if uniqueness_check(c, c_tilde) != (c == c_tilde):
            return TrialOutcome(index, 0, ok=False, input=label, message='uniqueness check disagrees with c == c~')

        f5 = harmonic_generator(5, HarmonicKind.F)
        normal = f5 + Poly.monomial(6, 0, c)
        spec = SampleSpec(2, coefficient_bound=self.coefficient_bound)
        phi = DiffeoJet.perturbation(sample_homogeneous(spec, rng), sample_homogeneous(spec, rng), 6)
        moved = compose(normal, phi, 6)
        recovered = full_reduce(moved, 5, 6).normal_form
        if recovered != normal:
            return TrialOutcome(
                index, 0, ok=False, input=f'{label}, phi=({phi.px}, {phi.py})',
                message=f'reducing the moved germ gave {recovered}, expected {normal}',
            )
        return TrialOutcome(index, 0, ok=True, input=label)
