"""
Report types which don't belong to a single computational module, and :func:`emit_report`, which turns any report
into either canonical text or JSON.

JSON goes through the serializers in :mod:`germs.serializers` and DRF's ``JSONRenderer``; serializer fields are
declared in a fixed order, so the same report always renders to the same bytes.
"""
import logging
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional

from rest_framework.renderers import JSONRenderer

from germs import serializers as s
from germs.conformal import LinearMap2, fixes, maps_to, stabilizer_elements, stabilizer_generators
from germs.determinacy import DeterminacyReport, InclusionCertificate
from germs.grammar import format_monomial, format_poly
from germs.harmonic import HarmonicKind, harmonic_generator, laplacian_power
from germs.poly import Poly
from germs.reduction import ClassificationResult, OperatorVerdict, ReductionReport
from germs.verify.base import VerifyReport

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class LaplacianReport:
    poly: Poly
    power: int
    result: Poly

    @property
    def harmonic(self) -> bool:
        """``True`` when ``Δ^power`` annihilates ``poly``"""
        return self.result.is_zero

    @property
    def jet_order(self) -> int:
        return 0 if self.poly.is_zero else int(self.poly.degree)


def laplacian_report(p: Poly, power: int) -> LaplacianReport:
    if power < 1:
        raise ValueError(f'Laplacian power must be positive, got {power}')
    return LaplacianReport(poly=p, power=power, result=laplacian_power(p, power))


@dataclass(frozen=True)
class StabilizerCheck:
    name: str
    map: LinearMap2
    fixes_f: bool
    g_sign: Optional[int]


@dataclass(frozen=True)
class StabilizerReport:
    k: int
    generators: List[StabilizerCheck]
    elements: List[StabilizerCheck]

    @property
    def jet_order(self) -> int:
        return self.k


def _check(name: str, L: LinearMap2, k: int) -> StabilizerCheck:
    fk, gk = harmonic_generator(k, HarmonicKind.F), harmonic_generator(k, HarmonicKind.G)
    sign = 1 if fixes(L, gk) else (-1 if maps_to(L, gk, -gk) else None)
    return StabilizerCheck(name=name, map=L, fixes_f=fixes(L, fk), g_sign=sign)


def stabilizer_report(k: int) -> StabilizerReport:
    """Check every element of the dihedral stabilizer of ``f_k`` against ``f_k`` and ``g_k``"""
    rotation, reflection = stabilizer_generators(k)
    return StabilizerReport(
        k=k,
        generators=[_check('R', rotation, k), _check('S', reflection, k)],
        elements=[_check(str(e), e.matrix(), k) for e in stabilizer_elements(k)],
    )


def _map_text(L: LinearMap2) -> str:
    rows = '; '.join(' '.join(s.scalar_str(v) for v in row) for row in L.entries)
    return f'{L.mode.value} [{rows}]'


def _terms_text(terms) -> str:
    return ', '.join(f'{format_monomial(m)}: {s.rational_str(c)}' for m, c in terms) or '(none)'


def _statement(label) -> str:
    return f' [{label}]' if label else ''


def _reduction_text(r: ReductionReport) -> List[str]:
    lines = [
        f'clause {r.clause}{_statement(r.statement)}: '
        f'degree {r.target_degree} over {r.kind.value.lower()}{r.k} (action rank {r.rank})',
        f'  phi = ({format_poly(r.phi.px)}, {format_poly(r.phi.py)})',
        f'  residual: {_terms_text(r.residual)}',
        f'  formula:  {_terms_text(r.formula)} [{"agrees" if r.formula_check else "DISAGREES"}]',
    ]
    return lines + [f'  note: {n}' for n in r.notes]


def _classification_text(r: ClassificationResult) -> List[str]:
    label = r.label + (f' ({r.singularity_class})' if r.singularity_class and r.singularity_class != r.label else '')
    lines = [f'label: {label}']
    if r.order is not None:
        lines.append(f'order: {r.order}')
    lines += [f'normal form: {format_poly(r.normal_form)}', f'jet order: {r.jet_order}']
    if r.leading_map is not None:
        lines.append(f'leading map: {_map_text(r.leading_map)}' + (' (approx)' if r.approx else ''))
    for step in r.steps:
        lines += _reduction_text(step)
    if r.diagnostic:
        lines.append(f'diagnostic: {r.diagnostic}')
    return lines + [f'note: {n}' for n in r.notes]


def _certificate_text(c: InclusionCertificate) -> List[str]:
    line = f'degree {c.k}: rank {c.rank} of {c.required_rank} over {c.generator_count} products'
    if c.holds:
        return [f'{line}, inclusion holds']
    return [f'{line}, inclusion fails (witness {format_monomial(c.witness)})']


def _determinacy_text(r: DeterminacyReport) -> List[str]:
    lines = [f'k = {r.k}: bound {r.bound}, certified {r.certified_bound}',
             f'holds at bound: {"yes" if r.holds_at_bound else "no"}']
    for c in r.certificates:
        lines += _certificate_text(c)
    return lines + [f'note: {n}' for n in r.notes]


def _laplacian_text(r: LaplacianReport) -> List[str]:
    return [
        f'Δ^{r.power}({format_poly(r.poly)}) = {format_poly(r.result)}',
        f'{r.power}-harmonic: {"yes" if r.harmonic else "no"}',
    ]


def _stabilizer_text(r: StabilizerReport) -> List[str]:
    lines = [f'stabilizer of f{r.k} (order {2 * r.k})']
    for c in r.elements:
        sign = {1: '+g', -1: '-g', None: 'moves g'}[c.g_sign]
        lines.append(f'{c.name:8} {_map_text(c.map):48} fixes f: {"yes" if c.fixes_f else "no"}, {sign}')
    return lines


def _verdict_text(v: OperatorVerdict) -> List[str]:
    lines = []
    for c in v.checks:
        state = 'matches solver' if c.matches else f'corrected to {format_poly(c.corrected)}'
        lines.append(f'  operator {c.label} on {format_monomial(c.monomial)}: {state}')
    return lines


def _verify_text(r: VerifyReport) -> List[str]:
    lines = [
        f'clause {r.clause}{_statement(r.statement)}: {r.summary}',
        f'trials {r.trials}, seed {r.seed}, bound {r.coefficient_bound}, jet order {r.jet_order}, '
        f'prng {r.prng["algorithm"]} (numpy {r.prng["numpy"]})',
    ]
    if r.operator_verdict is not None:
        lines += _verdict_text(r.operator_verdict)
    for f in r.failures:
        lines.append(f'COUNTEREXAMPLE trial {f.index} seed {f.seed}: {f.input}')
        if f.message:
            lines.append(f'  {f.message}')
    return lines + [f'note: {n}' for n in r.notes]


REPORTS = {
    ClassificationResult: (s.ClassificationResultSerializer, _classification_text),
    ReductionReport: (s.ReductionReportSerializer, _reduction_text),
    DeterminacyReport: (s.DeterminacyReportSerializer, _determinacy_text),
    InclusionCertificate: (s.InclusionCertificateSerializer, _certificate_text),
    LaplacianReport: (s.LaplacianReportSerializer, _laplacian_text),
    StabilizerReport: (s.StabilizerReportSerializer, _stabilizer_text),
    OperatorVerdict: (s.OperatorVerdictSerializer, _verdict_text),
    VerifyReport: (s.VerifyReportSerializer, _verify_text),
}   # type: Dict[type, tuple]
"""Report type -> (serializer class, text renderer)"""


def _lookup(result) -> tuple:
    try:
        return REPORTS[type(result)]
    except KeyError:
        raise TypeError(f'No report renderer for {type(result).__name__}')


def serialize(result) -> dict:
    serializer, _ = _lookup(result)
    return serializer(result).data


def emit_report(result, json: bool = False) -> str:
    """
    Render ``result`` (any of the types in :data:`REPORTS`) as indented JSON when ``json`` is true, otherwise as
    canonical text lines naming the clause each reduction step instantiates.
    """
    serializer, text = _lookup(result)
    if json:
        return JSONRenderer().render(serializer(result).data, renderer_context={'indent': 2}).decode('utf-8')
    return '\n'.join(text(result))
