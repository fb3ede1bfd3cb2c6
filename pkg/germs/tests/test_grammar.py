from fractions import Fraction

from django.test import SimpleTestCase

from germs.exceptions import PolynomialSyntaxError
from germs.grammar import format_coefficient, format_monomial, format_poly, parse
from germs.poly import Monomial, Poly
from germs.tests.helpers import random_poly, seeded

x, y = Poly.x(), Poly.y()


class ParseTest(SimpleTestCase):

    def test_canonical_reordering(self):
        self.assertEqual(format_poly(parse('5*x*y^4 + x^5 - 10*x^3*y^2')), 'x^5 - 10*x^3*y^2 + 5*x*y^4')

    def test_whitespace_is_insignificant(self):
        self.assertEqual(parse(' x ^ 2 *y-3 * y '), x ** 2 * y - 3 * y)

    def test_leading_sign(self):
        self.assertEqual(parse('-x + y'), y - x)
        self.assertEqual(parse('+x'), x)

    def test_rational_coefficients(self):
        self.assertEqual(parse('(1/3)*x*y'), Poly.monomial(1, 1, Fraction(1, 3)))
        self.assertEqual(parse('(-1/2)*x'), Poly.monomial(1, 0, Fraction(-1, 2)))
        self.assertEqual(parse('x - (2/4)*y'), x - Poly.monomial(0, 1, Fraction(1, 2)))

    def test_constants_and_repeated_factors(self):
        self.assertEqual(parse('7'), Poly.constant(7))
        self.assertEqual(parse('0'), Poly.zero())
        self.assertEqual(parse('x*x*y'), x ** 2 * y)

    def test_like_terms_combine(self):
        self.assertEqual(parse('x^2 + x^2 - 2*x^2 + y'), y)

    def test_bad_exponent_offset(self):
        with self.assertRaises(PolynomialSyntaxError) as cm:
            parse('x^^2')
        self.assertEqual(cm.exception.offset, 2)
        self.assertIn('Expected a positive integer exponent', str(cm.exception))
        self.assertIn('(at offset 2)', str(cm.exception))

    def test_zero_exponent(self):
        with self.assertRaises(PolynomialSyntaxError) as cm:
            parse('x^0')
        self.assertEqual(cm.exception.offset, 2)

    def test_zero_denominator(self):
        with self.assertRaises(PolynomialSyntaxError) as cm:
            parse('(1/0)*x')
        self.assertEqual(cm.exception.offset, 3)

    def test_offset_is_in_bytes(self):
        # U+00A0 is whitespace, but two bytes in UTF-8
        with self.assertRaises(PolynomialSyntaxError) as cm:
            parse('x +\u00a0y^^2')
        self.assertEqual(cm.exception.offset, 7)

    def test_rejects_junk(self):
        for text in ('', 'x +', '2x', 'z', 'x**2', '(1/2', 'x y'):
            with self.subTest(text=text), self.assertRaises(PolynomialSyntaxError):
                parse(text)


class FormatTest(SimpleTestCase):

    def test_format_monomial(self):
        self.assertEqual(format_monomial(Monomial(0, 0)), '1')
        self.assertEqual(format_monomial(Monomial(1, 0)), 'x')
        self.assertEqual(format_monomial(Monomial(3, 2)), 'x^3*y^2')

    def test_format_coefficient(self):
        self.assertEqual(format_coefficient(Fraction(-3)), '3')
        self.assertEqual(format_coefficient(Fraction(1, 3)), '(1/3)')

    def test_format_poly(self):
        self.assertEqual(format_poly(Poly.zero()), '0')
        self.assertEqual(format_poly(-x + 1), '1 - x')
        self.assertEqual(format_poly(Poly.monomial(1, 1, Fraction(-1, 3)) + y ** 2), '-(1/3)*x*y + y^2')
        self.assertEqual(str(x ** 2 - 2 * x * y), 'x^2 - 2*x*y')

    def test_round_trip(self):
        rng = seeded(3)
        for _ in range(500):
            p = random_poly(rng, max_degree=6, terms=5, rational=True)
            self.assertEqual(parse(format_poly(p)), p)
