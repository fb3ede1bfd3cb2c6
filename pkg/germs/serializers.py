"""
JSON schemas for every report the CLI emits, as Django REST Framework serializers over the report dataclasses.

Conventions shared by every schema:

- Rationals are always ``"p/q"`` strings (``"3/1"`` for integers), never floats.
- Polynomials and monomials are canonical text in the polynomial grammar (see :mod:`germs.grammar`).
- Approximate (floating point) values are decimal strings from :func:`repr`, so they round-trip exactly.
- Every report carries the ``jet_order`` it was computed at.

"""
from fractions import Fraction

from rest_framework import serializers

from germs.exceptions import PolynomialSyntaxError
from germs.grammar import format_monomial, format_poly, parse
from germs.poly import Monomial


def rational_str(value) -> str:
    value = Fraction(value)
    return f'{value.numerator}/{value.denominator}'


def scalar_str(value) -> str:
    """``"p/q"`` for exact values, ``repr`` decimal for floats"""
    return repr(float(value)) if isinstance(value, float) else rational_str(value)


class RationalField(serializers.Field):
    default_error_messages = {'invalid': 'Expected a rational number in "p/q" form.'}

    def to_representation(self, value):
        return rational_str(value)

    def to_internal_value(self, data):
        try:
            return Fraction(str(data))
        except (ValueError, ZeroDivisionError):
            self.fail('invalid')


class ScalarField(serializers.Field):
    def to_representation(self, value):
        return scalar_str(value)


class PolyField(serializers.Field):
    default_error_messages = {'invalid': 'Invalid polynomial: {error}'}

    def to_representation(self, value):
        return format_poly(value)

    def to_internal_value(self, data):
        try:
            return parse(str(data))
        except PolynomialSyntaxError as e:
            self.fail('invalid', error=str(e))


class MonomialField(serializers.Field):
    default_error_messages = {'invalid': 'Expected a single monomial, got {data!r}'}

    def to_representation(self, value):
        return format_monomial(value)

    def to_internal_value(self, data):
        try:
            p = parse(str(data))
        except PolynomialSyntaxError:
            self.fail('invalid', data=data)
        if len(p) != 1 or p.terms[0][1] != 1:
            self.fail('invalid', data=data)
        return p.terms[0][0]


class TermListField(serializers.Field):
    """A list of ``(Monomial, Fraction)`` pairs as ``[{"monomial": "x^6", "coefficient": "1/5"}, ...]``"""

    def to_representation(self, value):
        return [dict(monomial=format_monomial(m), coefficient=rational_str(c)) for m, c in value]

    def to_internal_value(self, data):
        return [(MonomialField().to_internal_value(d['monomial']), Fraction(d['coefficient'])) for d in data]


class EnumValueField(serializers.Field):
    def to_representation(self, value):
        return value.value


class LinearMapSerializer(serializers.Serializer):
    mode = EnumValueField()
    entries = serializers.SerializerMethodField()
    det = ScalarField()
    conformal = serializers.BooleanField(source='is_conformal')

    def get_entries(self, obj):
        return [[scalar_str(v) for v in row] for row in obj.entries]


class DiffeoJetSerializer(serializers.Serializer):
    px = PolyField()
    py = PolyField()
    jet_order = serializers.IntegerField()


class ReductionReportSerializer(serializers.Serializer):
    clause = serializers.CharField()
    paper_clause = serializers.CharField(source='statement')
    leading = serializers.SerializerMethodField()
    target_degree = serializers.IntegerField()
    jet_order = serializers.IntegerField()
    rank = serializers.IntegerField()
    phi = DiffeoJetSerializer()
    residual = TermListField()
    formula = TermListField()
    formula_check = serializers.BooleanField()
    result = PolyField()
    notes = serializers.ListField(child=serializers.CharField())

    def get_leading(self, obj):
        return f'{obj.kind.value.lower()}{obj.k}'


class ClassificationResultSerializer(serializers.Serializer):
    order = serializers.IntegerField(allow_null=True)
    label = serializers.CharField()
    singularity_class = serializers.CharField(allow_null=True)
    normal_form = PolyField()
    jet_order = serializers.IntegerField()
    approx = serializers.BooleanField()
    leading_map = LinearMapSerializer(allow_null=True)
    steps = ReductionReportSerializer(many=True)
    notes = serializers.ListField(child=serializers.CharField())
    diagnostic = serializers.CharField(allow_null=True)


class InclusionCertificateSerializer(serializers.Serializer):
    k = serializers.IntegerField()
    jet_order = serializers.IntegerField()
    generators = serializers.ListField(child=PolyField())
    generator_count = serializers.IntegerField()
    rank = serializers.IntegerField()
    required_rank = serializers.IntegerField()
    holds = serializers.BooleanField()
    witness = MonomialField(allow_null=True)


class DeterminacyReportSerializer(serializers.Serializer):
    k = serializers.IntegerField()
    bound = serializers.IntegerField()
    certified_bound = serializers.IntegerField(allow_null=True)
    holds_at_bound = serializers.BooleanField()
    jet_order = serializers.IntegerField()
    certificates = InclusionCertificateSerializer(many=True)
    notes = serializers.ListField(child=serializers.CharField())


class LaplacianReportSerializer(serializers.Serializer):
    poly = PolyField()
    power = serializers.IntegerField()
    result = PolyField()
    harmonic = serializers.BooleanField()
    jet_order = serializers.IntegerField()


class StabilizerCheckSerializer(serializers.Serializer):
    element = serializers.CharField(source='name')
    map = LinearMapSerializer()
    fixes_f = serializers.BooleanField()
    g_sign = serializers.IntegerField(allow_null=True)


class StabilizerReportSerializer(serializers.Serializer):
    k = serializers.IntegerField()
    jet_order = serializers.IntegerField()
    generators = StabilizerCheckSerializer(many=True)
    elements = StabilizerCheckSerializer(many=True)


class OperatorCheckSerializer(serializers.Serializer):
    monomial = MonomialField()
    label = serializers.CharField()
    operator = PolyField()
    normalization = RationalField()
    matches = serializers.BooleanField()
    corrected = PolyField(allow_null=True)


class OperatorVerdictSerializer(serializers.Serializer):
    clause = serializers.CharField()
    matches = serializers.BooleanField()
    checks = OperatorCheckSerializer(many=True)


class TrialFailureSerializer(serializers.Serializer):
    index = serializers.IntegerField()
    seed = serializers.IntegerField()
    input = serializers.CharField()
    message = serializers.CharField()


class VerifyReportSerializer(serializers.Serializer):
    clause = serializers.CharField()
    paper_clause = serializers.CharField(source='statement', allow_null=True)
    trials = serializers.IntegerField()
    seed = serializers.IntegerField()
    coefficient_bound = serializers.IntegerField()
    passed = serializers.IntegerField()
    summary = serializers.CharField()
    jet_order = serializers.IntegerField()
    prng = serializers.DictField(child=serializers.CharField())
    failures = TrialFailureSerializer(many=True)
    operator_verdict = OperatorVerdictSerializer(allow_null=True)
    notes = serializers.ListField(child=serializers.CharField())
