"""
The classification pipeline: normalize the harmonic leading term, then chain :func:`.reduce_step` over every
target degree up to the requested depth.

Orders 1 to 4 are classical and reported by label only; orders 5 to 7 are reduced to their (pre-)normal forms.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Union

from django.conf import settings

from germs.conformal import LinearMap2, Mode, approx_compose, normalize_leading, stabilizer_generators
from germs.exceptions import ReductionInvariantError, UnsupportedReduction
from germs.harmonic import HarmonicKind, harmonic_generator, laplacian, laplacian_power
from germs.poly import Poly, compose, compose_truncated, homogeneous_monomials, jet_equal
from germs.reduction.solver import ReductionReport, leading_kind, reduce_step

log = logging.getLogger(__name__)

MAX_DEPTH = {5: 6, 6: 8, 7: 10}
"""Highest target degree each reducible order is supported to"""

MAX_ORDER = 7

LABELS = {
    1: 'regular',
    2: 'Morse',
    3: 'D4-minus',
    4: 'X_{1,0}',
    5: 'harmonic-k5',
    6: 'harmonic-k6',
    7: 'harmonic-k7',
}
UNSUPPORTED = 'unsupported'

SINGULARITY_CLASSES = {3: 'D4-minus', 4: 'X_{1,0}', 5: 'N_16'}

CLASSICAL_NOTES = {
    1: ['right-equivalent to x by the implicit function theorem'],
    2: ['right-equivalent to x^2 - y^2 by the Morse lemma'],
    3: ['classical normal form x^2*y - y^3; the harmonic representative is f3 = x^3 - 3*x*y^2'],
    4: ['f4 is 5-determined by rank; absorbing every degree 5 term upgrades this to 4-determined',
        'modality of X_{1,0} is not computed'],
}

NORMALIZE_TARGET = {5: HarmonicKind.F, 6: HarmonicKind.G, 7: HarmonicKind.G}


@dataclass
class ClassificationResult:
    order: Optional[int]
    label: str
    normal_form: Poly
    steps: List[ReductionReport] = field(default_factory=list)
    jet_order: int = 0
    singularity_class: Optional[str] = None
    leading_map: Optional[LinearMap2] = None
    approx: bool = False
    notes: List[str] = field(default_factory=list)
    diagnostic: Optional[str] = None

    @property
    def supported(self) -> bool:
        return self.label != UNSUPPORTED


def _default_depth(k: int, depth: Optional[int]) -> int:
    if k not in MAX_DEPTH:
        raise UnsupportedReduction(f'Reduction is only supported for orders {sorted(MAX_DEPTH)}, got {k}')
    depth = MAX_DEPTH[k] if depth is None else depth
    if depth < k + 1 or depth > MAX_DEPTH[k]:
        raise UnsupportedReduction(f'Depth for order {k} must be between {k + 1} and {MAX_DEPTH[k]}, got {depth}')
    return depth


def full_reduce(h: Poly, k: int, depth: int = None) -> ClassificationResult:
    """
    Reduce every degree from ``k + 1`` to ``depth`` (default: the highest supported) onto its residual monomials.

    ``homogeneous_component(h, k)`` must already be ``f_k`` or ``g_k``; run :func:`.normalize_leading` first.
    Each step is checked to leave every lower degree untouched.

    :raises UnsupportedReduction: unsupported order / depth, ``h`` has terms below ``k``, or the leading term is not
                                  a generator
    """
    depth = _default_depth(k, depth)
    if h.order != k:
        raise UnsupportedReduction(f'Germ must have order {k}, got order {h.order}')
    leading = h.homogeneous_component(k)
    if leading_kind(leading) is None:
        raise UnsupportedReduction(f'Leading term {leading} must be f{k} or g{k}; normalize it first')

    current = h.truncate(depth)
    steps = []
    for t in range(k + 1, depth + 1):
        step = reduce_step(leading, current - leading, t)
        reduced = compose_truncated(current, step.phi, depth).body
        if not jet_equal(reduced, current, t - 1):
            log.error('Step at degree %d changed the %d-jet of %s', t, t - 1, current)
            raise ReductionInvariantError(f'Reduction at degree {t} disturbed lower degrees')
        if reduced.homogeneous_component(t) != step.residual_poly:
            log.error('Step at degree %d left %s, expected %s', t, reduced.homogeneous_component(t),
                      step.residual_poly)
            raise ReductionInvariantError(f'Reduction at degree {t} left non-residual monomials')
        steps.append(step)
        current = reduced

    notes = [n for s in steps for n in s.notes]
    if k == 5 and depth == MAX_DEPTH[5]:
        notes.append('normal form f5 + c*x^6 is unique: c is an invariant')
    elif k in (6, 7):
        notes.append(f'pre-normal form up to the {depth}-jet; uniqueness is not claimed')
    return ClassificationResult(
        order=k, label=LABELS[k], normal_form=current, steps=steps, jet_order=depth,
        singularity_class=SINGULARITY_CLASSES.get(k), notes=notes,
    )


def _unsupported(h: Poly, order, diagnostic: str) -> ClassificationResult:
    log.info('Unsupported germ %s: %s', h, diagnostic)
    jet = int(h.degree) if not h.is_zero and h.degree >= 1 else 1
    return ClassificationResult(order=order, label=UNSUPPORTED, normal_form=h, jet_order=jet, diagnostic=diagnostic)


def classify(h: Poly, depth: int = None) -> ClassificationResult:
    """
    Classify the germ ``h`` by the order ``k`` of its harmonic leading term.

    Anything outside the supported range (zero germ, non-zero value at the origin, order above 7, non-harmonic
    leading term) comes back labelled ``unsupported`` with a ``diagnostic`` rather than raising.
    """
    if h.is_zero:
        return _unsupported(h, None, 'the zero germ has no leading term')
    if h.constant_term != 0:
        return _unsupported(h, 0, f'germ does not vanish at the origin (constant term {h.constant_term})')
    k = int(h.order)
    if k > MAX_ORDER:
        return _unsupported(h, k, f'order {k} is above the supported maximum {MAX_ORDER}')
    leading = h.homogeneous_component(k)
    lap = laplacian(leading)
    if not lap.is_zero:
        return _unsupported(h, k, f'leading term is not harmonic: Δh_{k} = {lap}')

    if k <= 4:
        bound = max(k, 2 * k - 4)
        return ClassificationResult(
            order=k, label=LABELS[k], normal_form=harmonic_generator(k, HarmonicKind.F),
            jet_order=bound, singularity_class=SINGULARITY_CLASSES.get(k), notes=list(CLASSICAL_NOTES[k]),
        )

    depth = _default_depth(k, depth)
    target = NORMALIZE_TARGET[k]
    L = normalize_leading(leading, k, target)
    if L.mode == Mode.APPROX:
        log.info('Leading term %s only normalizes approximately; skipping exact reduction', leading)
        return ClassificationResult(
            order=k, label=LABELS[k], normal_form=harmonic_generator(k, target), jet_order=depth,
            singularity_class=SINGULARITY_CLASSES.get(k), leading_map=L, approx=True,
            notes=['leading term normalized in floating point; higher degrees were not reduced'],
        )
    normalized = compose(h.truncate(depth), L.as_diffeo(depth), depth)
    result = full_reduce(normalized, k, depth)
    result.leading_map = L
    if k == 6:
        result.notes.append('leading term normalized by a linear conformal map')
    return result


def x6_functional() -> List[Fraction]:
    """``Δ³`` as a functional on degree 6 coefficient vectors"""
    return [laplacian_power(Poly.monomial(m.ex, m.ey), 3).constant_term for m in homogeneous_monomials(6)]


@dataclass(frozen=True)
class InvarianceCheck:
    generator: str
    mode: Mode
    value: Union[Fraction, float]
    expected: Fraction
    holds: bool


def residual_invariance(c: Fraction) -> List[InvarianceCheck]:
    """
    For each stabilizer generator ``L`` of ``f5``, compare ``Δ³((c x^6) o L)`` with ``6! c``: exactly for the
    reflection, and within ``settings.APPROX_TOLERANCE`` (relative to ``max(1, |6! c|)``) for the rotation.
    """
    c = Fraction(c)
    term = Poly.monomial(6, 0, c)
    expected = 720 * c
    functional = x6_functional()
    checks = []
    for name, L in zip(('rotation', 'reflection'), stabilizer_generators(5)):
        if L.is_exact:
            value = laplacian_power(compose(term, L.as_diffeo(6)), 3).constant_term
            checks.append(InvarianceCheck(name, L.mode, value, expected, value == expected))
            continue
        composed = approx_compose(term, L)
        value = sum(float(w) * composed.get(m, 0.0) for w, m in zip(functional, homogeneous_monomials(6)))
        tol = settings.APPROX_TOLERANCE * max(1.0, abs(float(expected)))
        checks.append(InvarianceCheck(name, L.mode, value, expected, abs(value - float(expected)) < tol))
    return checks


def uniqueness_check(c: Fraction, c_tilde: Fraction) -> bool:
    """
    ``True`` when ``f5 + c*x^6`` and ``f5 + c_tilde*x^6`` are right-equivalent, i.e. when ``c == c_tilde``.

    First re-checks, for both ``c`` and ``c_tilde``, that the ``Δ³`` residual is invariant under the stabilizer
    of ``f5``.

    :raises ReductionInvariantError: a stabilizer generator changed the residual
    """
    for value in (c, c_tilde):
        failed = [chk for chk in residual_invariance(value) if not chk.holds]
        if failed:
            log.error('Residual of %s*x^6 is not invariant under %s', value, [f.generator for f in failed])
            raise ReductionInvariantError(f'Δ³ residual of {value}*x^6 changed under the stabilizer of f5')
    return Fraction(c) == Fraction(c_tilde)
