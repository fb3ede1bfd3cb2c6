import logging
from abc import ABC, abstractmethod
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import numpy as np
from django.conf import settings

from germs.exceptions import GermError
from germs.harmonic import make_rng, prng_info

log = logging.getLogger(__name__)


def trial_seed(seed: int, index: int) -> int:
    """Independent 64-bit seed for trial ``index`` of a run seeded with ``seed``"""
    return int(np.random.SeedSequence([seed, index]).generate_state(1, np.uint64)[0])


@dataclass
class TrialOutcome:
    index: int
    seed: int
    ok: bool
    input: str = ''
    message: str = ''
    detail: dict = field(default_factory=dict)


@dataclass
class VerifyReport:
    clause: str
    trials: int
    seed: int
    coefficient_bound: int
    passed: int
    summary: str
    jet_order: int
    prng: dict
    failures: List[TrialOutcome] = field(default_factory=list)
    operator_verdict: Optional[object] = None
    notes: List[str] = field(default_factory=list)
    statement: Optional[str] = None

    @property
    def counterexample(self) -> bool:
        return len(self.failures) > 0


class BasePlan(ABC):
    """
    BasePlan - base class for verify plans

    A verify plan re-checks one clause of the classification (a residual formula, an absorption statement, the
    hand-table crosscheck, ...) on ``trials`` randomly drawn inputs. Plans must be deterministic given
    ``(clause, trials, seed, coefficient_bound)``: every trial draws only from the generator it is handed, which is
    seeded from :func:`.trial_seed`.

    Subclasses set ``provides`` to the clause identifiers they handle, and implement :meth:`.trial`. They may
    override :meth:`.summarize` and :meth:`.extra_notes` to add to the report.
    """

    provides = []
    """A list of clause identifiers this plan can verify, e.g. ``['h5-deg6', 'h6-deg7']``"""

    noun = 'trials pass'
    """Completes the default summary line ``"{passed}/{trials} {noun}"``"""

    statements = {}   # type: Dict[str, Tuple[Optional[str], str]]
    """
    Clause identifier -> ``(statement_id, statement)``: the id ``verify --theorem`` accepts for the clause (or
    ``None``) and the published label reported as ``paper_clause``, e.g. ``{'h5-deg6': ('1.2', 'Thm1.2(2)')}``
    """

    def __init__(self, clause: str, trials: int = None, seed: int = None, coefficient_bound: int = None):
        if clause not in self.provides:
            raise ValueError(f'{type(self).__name__} does not provide clause {clause!r}')
        self.clause = clause
        self.trials = settings.DEFAULT_TRIALS if trials is None else int(trials)
        self.seed = settings.DEFAULT_SEED if seed is None else int(seed)
        self.coefficient_bound = settings.DEFAULT_COEFFICIENT_BOUND if coefficient_bound is None \
            else int(coefficient_bound)
        if self.trials < 1 or self.coefficient_bound < 1:
            raise ValueError('trials and coefficient_bound must both be positive')

    @property
    def statement(self) -> Optional[str]:
        return self.statements.get(self.clause, (None, None))[1]

    @property
    @abstractmethod
    def jet_order(self) -> int:
        """Highest degree the plan's checks are carried out at"""
        raise NotImplementedError

    @abstractmethod
    def trial(self, index: int, rng: np.random.Generator) -> TrialOutcome:
        """
        Run one trial, drawing every random choice from ``rng``. Return a :class:`.TrialOutcome` with ``ok=False``
        (plus the offending ``input`` and a ``message``) on a counterexample.

        Raising a :class:`.GermError` is also recorded as a failed trial.
        """
        raise NotImplementedError

    def run_trial(self, index: int) -> TrialOutcome:
        seed = trial_seed(self.seed, index)
        try:
            outcome = self.trial(index, make_rng(seed))
        except GermError as e:
            log.exception('Trial %d of %s raised an error', index, self.clause)
            outcome = TrialOutcome(index=index, seed=seed, ok=False, message=f'{type(e).__name__}: {e}')
        outcome.index, outcome.seed = index, seed
        if not outcome.ok:
            log.warning('Counterexample for %s in trial %d (seed %d): %s %s',
                        self.clause, index, seed, outcome.input, outcome.message)
        return outcome

    def summarize(self, outcomes: List[TrialOutcome]) -> str:
        passed = sum(1 for o in outcomes if o.ok)
        return f'{passed}/{len(outcomes)} {self.noun}'

    def extra_notes(self, outcomes: List[TrialOutcome]) -> List[str]:
        return []

    def operator_verdict(self):
        return None

    def run(self, workers: int = None) -> VerifyReport:
        """
        Run every trial, in a process pool when ``workers`` (default ``settings.VERIFY_WORKERS``) is above 1.
        Outcomes are always ordered by trial index.
        """
        workers = settings.VERIFY_WORKERS if workers is None else workers
        log.info('Verifying %s: %d trials, seed %d, bound %d, %d worker(s)',
                 self.clause, self.trials, self.seed, self.coefficient_bound, workers)
        if workers > 1:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                outcomes = list(pool.map(self.run_trial, range(self.trials)))
        else:
            outcomes = [self.run_trial(i) for i in range(self.trials)]

        failures = [o for o in outcomes if not o.ok]
        return VerifyReport(
            clause=self.clause, trials=self.trials, seed=self.seed, coefficient_bound=self.coefficient_bound,
            passed=len(outcomes) - len(failures), summary=self.summarize(outcomes), jet_order=self.jet_order,
            prng=prng_info(), failures=failures, operator_verdict=self.operator_verdict(),
            notes=self.extra_notes(outcomes), statement=self.statement,
        )
