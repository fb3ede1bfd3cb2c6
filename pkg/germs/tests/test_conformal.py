import math
from fractions import Fraction

from django.test import SimpleTestCase

from germs.conformal import LinearMap2, Mode, approx_residual, check_leading, compose_linear, fixes, maps_to, \
    leading_as_complex, normalize_leading, stabilizer_elements, stabilizer_generators
from germs.exceptions import ApproxModeError, DegenerateLeadingTerm, InvalidDiffeoError, NonHarmonicLeadingTerm, \
    NotHomogeneousError
from germs.harmonic import HarmonicKind, harmonic_generator, laplacian
from germs.poly import Poly
from germs.tests.helpers import random_poly, seeded

x, y = Poly.x(), Poly.y()
F = HarmonicKind.F
G = HarmonicKind.G


class LinearMapTest(SimpleTestCase):

    def test_singular_map_rejected(self):
        with self.assertRaises(InvalidDiffeoError):
            LinearMap2(((1, 2), (2, 4)))
        with self.assertRaises(InvalidDiffeoError):
            LinearMap2(((1.0, 2.0), (2.0, 4.0)), Mode.APPROX)

    def test_conformal_flags(self):
        L = LinearMap2.from_complex(3, 4)
        self.assertTrue(L.is_conformal)
        self.assertEqual(L.det, 25)
        self.assertEqual(L.conformal_factor, 25)
        self.assertTrue(LinearMap2.reflection().is_conformal)
        self.assertFalse(LinearMap2(((1, 1), (0, 1))).is_conformal)
        self.assertTrue(LinearMap2.identity().is_identity)

    def test_quarter_turns_are_exact(self):
        L = LinearMap2.rotation(math.pi / 2)
        self.assertTrue(L.is_exact)
        self.assertEqual(L.entries, ((0, -1), (1, 0)))
        self.assertTrue(LinearMap2.rotation(math.pi).is_exact)
        self.assertFalse(LinearMap2.rotation(2 * math.pi / 3).is_exact)

    def test_matmul(self):
        R = LinearMap2.rotation(math.pi / 2)
        self.assertTrue(R.matmul(R).matmul(R).matmul(R).is_identity)

    def test_approx_map_has_no_exact_diffeo(self):
        with self.assertRaises(ApproxModeError):
            LinearMap2.rotation(0.3).as_diffeo()

    def test_compose_linear(self):
        self.assertEqual(compose_linear(x ** 2 * y, LinearMap2.reflection()), -(x ** 2 * y))
        self.assertEqual(compose_linear(x * y, LinearMap2.from_complex(1, 1)), (x - y) * (x + y))


class LeadingTermTest(SimpleTestCase):

    def test_check_leading_errors(self):
        with self.assertRaises(DegenerateLeadingTerm):
            check_leading(Poly.zero(), 5)
        with self.assertRaises(NotHomogeneousError):
            check_leading(harmonic_generator(5, F) + x ** 4, 5)
        with self.assertRaises(NonHarmonicLeadingTerm) as cm:
            check_leading(x ** 5, 5)
        self.assertIn('20*x^3', str(cm.exception))

    def test_leading_as_complex(self):
        h = 2 * harmonic_generator(7, F) - 3 * harmonic_generator(7, G)
        self.assertEqual(leading_as_complex(h, 7), (2, -3))
        with self.assertRaises(NonHarmonicLeadingTerm):
            leading_as_complex(x ** 7, 7)


class NormalizeTest(SimpleTestCase):

    def test_exact_scaling(self):
        f5 = harmonic_generator(5, F)
        L = normalize_leading(32 * f5, 5)
        self.assertTrue(L.is_exact)
        self.assertEqual(L.entries, ((Fraction(1, 2), 0), (0, Fraction(1, 2))))
        self.assertEqual(compose_linear(32 * f5, L), f5)

    def test_generator_is_already_normal(self):
        for k in range(3, 8):
            self.assertTrue(normalize_leading(harmonic_generator(k, F), k).is_identity)

    def test_g5_onto_f5_is_approximate(self):
        L = normalize_leading(harmonic_generator(5, G), 5)
        self.assertEqual(L.mode, Mode.APPROX)
        self.assertTrue(L.is_conformal)
        self.assertLess(approx_residual(harmonic_generator(5, G), L, harmonic_generator(5, F)), 1e-9)
        with self.assertRaises(ApproxModeError):
            L.as_diffeo()

    def test_g_target(self):
        for k in (6, 7):
            h = 3 * harmonic_generator(k, G)
            L = normalize_leading(h, k, target=G)
            self.assertLess(approx_residual(h, L, harmonic_generator(k, G)), 1e-9)

    def test_rational_conformal_images_of_f4_normalize_exactly(self):
        f4 = harmonic_generator(4, F)
        for p, q in ((1, 2), (2, -1), (Fraction(1, 2), Fraction(3, 2)), (3, 0)):
            with self.subTest(p=p, q=q):
                h = compose_linear(f4, LinearMap2.from_complex(p, q))
                M = normalize_leading(h, 4)
                self.assertTrue(M.is_exact)
                self.assertEqual(compose_linear(h, M), f4)

    def test_random_leading_coefficients(self):
        rng = seeded(31)
        for _ in range(100):
            k = int(rng.integers(1, 7, endpoint=True))
            a, b = (int(v) for v in rng.integers(-9, 9, size=2, endpoint=True))
            if a == b == 0:
                a = 1
            target = F if rng.random() < 0.5 else G
            h = a * harmonic_generator(k, F) + b * harmonic_generator(k, G)
            L = normalize_leading(h, k, target=target)
            goal = harmonic_generator(k, target)
            with self.subTest(k=k, a=a, b=b, target=target):
                self.assertTrue(L.is_conformal)
                if L.is_exact:
                    self.assertEqual(compose_linear(h, L), goal)
                else:
                    self.assertLess(approx_residual(h, L, goal), 1e-9)

    def test_coefficients_beyond_float_range(self):
        f5 = harmonic_generator(5, F)
        for c in (Fraction(1, 10 ** 400), Fraction(10 ** 400), Fraction(-3, 10 ** 350)):
            with self.subTest(c=c), self.assertRaises(InvalidDiffeoError):
                normalize_leading(c * f5, 5)


class StabilizerTest(SimpleTestCase):

    def test_rotation_is_exact_only_for_small_orders(self):
        exact = [k for k in range(1, 9) if stabilizer_generators(k)[0].is_exact]
        self.assertEqual(exact, [1, 2, 4])

    def test_every_element_fixes_f(self):
        for k in range(3, 8):
            elements = stabilizer_elements(k)
            self.assertEqual(len(elements), 2 * k)
            for e in elements:
                with self.subTest(k=k, element=str(e)):
                    self.assertTrue(fixes(e.matrix(), harmonic_generator(k, F)))

    def test_reflection_negates_g(self):
        for k in range(3, 8):
            g = harmonic_generator(k, G)
            self.assertFalse(fixes(LinearMap2.reflection(), g))
            self.assertEqual(compose_linear(g, LinearMap2.reflection()), -g)

    def test_reflections_send_g_to_minus_g(self):
        for k in range(3, 8):
            g = harmonic_generator(k, G)
            for e in stabilizer_elements(k):
                with self.subTest(k=k, element=str(e)):
                    self.assertEqual(maps_to(e.matrix(), g, -g), e.reflected)
                    self.assertEqual(maps_to(e.matrix(), g, g), not e.reflected)

    def test_element_labels(self):
        self.assertEqual(str(stabilizer_elements(4)[5]), 'R^1 S')
        self.assertEqual(str(stabilizer_elements(4)[0]), 'R^0')

    def test_rejects_order_zero(self):
        with self.assertRaises(ValueError):
            stabilizer_generators(0)


class ConformalLaplacianTest(SimpleTestCase):

    def test_laplacian_scales_by_the_conformal_factor(self):
        rng = seeded(32)
        for _ in range(100):
            p_, q_ = (Fraction(int(rng.integers(-5, 5, endpoint=True)), int(rng.integers(1, 4, endpoint=True)))
                      for _ in range(2))
            if p_ == q_ == 0:
                p_ = Fraction(1)
            L = LinearMap2.from_complex(p_, q_)
            if rng.random() < 0.5:
                L = L.matmul(LinearMap2.reflection())
            p = random_poly(rng, 6, terms=5, rational=True)
            with self.subTest(L=L.entries, p=str(p)):
                self.assertTrue(L.is_conformal)
                self.assertEqual(
                    laplacian(compose_linear(p, L)), compose_linear(laplacian(p), L) * L.conformal_factor
                )
