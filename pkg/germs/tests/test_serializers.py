import json
from fractions import Fraction

from django.test import SimpleTestCase
from rest_framework.exceptions import ValidationError

from germs.determinacy import determinacy_bound
from germs.harmonic import HarmonicKind, SampleSpec, harmonic_generator, sample_homogeneous
from germs.poly import Monomial, Poly
from germs.reduction import classify, reduce_step, verify_operators
from germs.reporting import emit_report, laplacian_report, serialize, stabilizer_report
from germs.serializers import MonomialField, PolyField, RationalField, TermListField, rational_str, scalar_str
from germs.tests.helpers import seeded

x, y = Poly.x(), Poly.y()
f5 = harmonic_generator(5, HarmonicKind.F)


class FieldTest(SimpleTestCase):

    def test_rational(self):
        self.assertEqual(rational_str(3), '3/1')
        self.assertEqual(rational_str(Fraction(-2, 6)), '-1/3')
        self.assertEqual(RationalField().to_internal_value('-1/3'), Fraction(-1, 3))
        with self.assertRaises(ValidationError):
            RationalField().to_internal_value('1/0')

    def test_scalar(self):
        self.assertEqual(scalar_str(0.5), '0.5')
        self.assertEqual(scalar_str(Fraction(1, 2)), '1/2')

    def test_poly(self):
        field = PolyField()
        self.assertEqual(field.to_representation(f5), 'x^5 - 10*x^3*y^2 + 5*x*y^4')
        self.assertEqual(field.to_internal_value('x^5 - 10*x^3*y^2 + 5*x*y^4'), f5)
        with self.assertRaises(ValidationError):
            field.to_internal_value('x^^2')

    def test_monomial(self):
        field = MonomialField()
        self.assertEqual(field.to_representation(Monomial(3, 2)), 'x^3*y^2')
        self.assertEqual(field.to_internal_value('x^3*y^2'), Monomial(3, 2))
        for bad in ('2*x', 'x + y'):
            with self.subTest(bad=bad), self.assertRaises(ValidationError):
                field.to_internal_value(bad)

    def test_term_list(self):
        terms = [(Monomial(7, 0), Fraction(3, 35)), (Monomial(6, 1), Fraction(0))]
        data = TermListField().to_representation(terms)
        self.assertEqual(data, [dict(monomial='x^7', coefficient='3/35'), dict(monomial='x^6*y', coefficient='0/1')])
        self.assertEqual(TermListField().to_internal_value(data), terms)


class ReportTest(SimpleTestCase):

    def test_classification_json(self):
        data = json.loads(emit_report(classify(f5 + x ** 6), json=True))
        self.assertEqual(data['label'], 'harmonic-k5')
        self.assertEqual(data['normal_form'], 'x^5 - 10*x^3*y^2 + 5*x*y^4 + x^6')
        self.assertEqual(data['jet_order'], 6)
        self.assertEqual(data['steps'][0]['residual'], [dict(monomial='x^6', coefficient='1/1')])
        self.assertEqual(data['steps'][0]['paper_clause'], 'Thm1.2(2)')
        self.assertEqual(data['leading_map']['entries'], [['1/1', '0/1'], ['0/1', '1/1']])

    def test_json_is_deterministic(self):
        result = classify(harmonic_generator(6, HarmonicKind.G) + x ** 7)
        self.assertEqual(emit_report(result, json=True), emit_report(result, json=True))

    def test_approx_map_is_decimal(self):
        data = serialize(classify(harmonic_generator(5, HarmonicKind.G)))
        self.assertEqual(data['leading_map']['mode'], 'approx')
        float(data['leading_map']['entries'][0][0])
        self.assertTrue(data['approx'])

    def test_reduction_text(self):
        text = emit_report(reduce_step(f5, x ** 4 * y ** 2, 6))
        self.assertTrue(text.startswith('clause h5-deg6 [Thm1.2(2)]: degree 6 over f5 (action rank 6)'))
        self.assertIn('residual: x^6: 1/5', text)

    def test_determinacy(self):
        data = serialize(determinacy_bound(6))
        self.assertEqual((data['bound'], data['certified_bound']), (8, 9))
        self.assertFalse(data['holds_at_bound'])
        self.assertEqual(data['certificates'][0]['witness'], 'x^8')

    def test_laplacian(self):
        report = laplacian_report(x ** 4 * y ** 2, 3)
        self.assertEqual(emit_report(report).splitlines(), ['Δ^3(x^4*y^2) = 144', '3-harmonic: no'])
        with self.assertRaises(ValueError):
            laplacian_report(x, 0)

    def test_stabilizer(self):
        report = stabilizer_report(4)
        self.assertEqual(len(report.elements), 8)
        self.assertTrue(all(c.fixes_f for c in report.elements))
        self.assertEqual([c.g_sign for c in report.elements], [1] * 4 + [-1] * 4)
        data = serialize(report)
        self.assertEqual(data['generators'][0]['element'], 'R')
        self.assertEqual(data['generators'][0]['map']['entries'], [['0/1', '-1/1'], ['1/1', '0/1']])

    def test_operator_verdict(self):
        data = serialize(verify_operators(6, 7))
        self.assertTrue(data['matches'])
        self.assertEqual([c['monomial'] for c in data['checks']], ['x^7', 'x^6*y'])
        self.assertIsNone(data['checks'][0]['corrected'])

    def test_unknown_type(self):
        with self.assertRaises(TypeError):
            emit_report(object())

    def test_json_reparses_to_the_reported_values(self):
        rng = seeded(50)
        for _ in range(50):
            tail = sample_homogeneous(SampleSpec(6, coefficient_bound=5), rng)
            result = classify(f5 + tail)
            data = json.loads(emit_report(result, json=True))
            self.assertEqual(PolyField().to_internal_value(data['normal_form']), result.normal_form)
            self.assertEqual(TermListField().to_internal_value(data['steps'][0]['residual']), result.steps[0].residual)
            self.assertEqual(data['jet_order'], 6)
