from fractions import Fraction

from django.test import SimpleTestCase

from germs.exceptions import NotHomogeneousError, UnsupportedReduction
from germs.harmonic import HarmonicKind, SampleSpec, harmonic_generator, sample_homogeneous
from germs.poly import Monomial, Poly, jet_equal
from germs.reduction import CLAUSES, action_matrix, classify, clause_id, clause_leading, crosscheck_hand_diffeo, \
    full_reduce, reduce_step, residual_formula, residual_invariance, uniqueness_check, verify_operators
from germs.tests.helpers import seeded

x, y = Poly.x(), Poly.y()
f5 = harmonic_generator(5, HarmonicKind.F)
g6 = harmonic_generator(6, HarmonicKind.G)
g7 = harmonic_generator(7, HarmonicKind.G)


class ActionMatrixTest(SimpleTestCase):

    def test_shapes_and_ranks(self):
        expected = {
            (5, 6): (7, 6, 6), (6, 7): (8, 6, 6), (6, 8): (9, 8, 8),
            (7, 8): (9, 6, 6), (7, 9): (10, 8, 8), (7, 10): (11, 10, 10),
        }
        for (k, t), (rows, cols, rank) in expected.items():
            with self.subTest(k=k, t=t):
                A = action_matrix(clause_leading(k), t)
                self.assertEqual(A.shape, (rows, cols))
                self.assertEqual(A.rank, rank)

    def test_residual_count_fills_the_cokernel(self):
        for (k, t), clause in CLAUSES.items():
            A = action_matrix(clause_leading(k), t)
            self.assertEqual(A.rank + len(clause.monomials), t + 1)

    def test_f_and_g_have_equal_ranks(self):
        for (k, t) in CLAUSES:
            with self.subTest(k=k, t=t):
                A_f = action_matrix(harmonic_generator(k, HarmonicKind.F), t)
                A_g = action_matrix(harmonic_generator(k, HarmonicKind.G), t)
                self.assertEqual(A_f.shape, A_g.shape)
                self.assertEqual(A_f.rank, A_g.rank)

    def test_degree_must_exceed_order(self):
        with self.assertRaises(UnsupportedReduction):
            action_matrix(f5, 5)


class ReduceStepTest(SimpleTestCase):

    def test_x4y2_over_f5(self):
        step = reduce_step(f5, x ** 4 * y ** 2, 6)
        self.assertEqual(step.residual, [(Monomial(6, 0), Fraction(1, 5))])
        self.assertTrue(step.formula_check)
        self.assertEqual(step.clause, 'h5-deg6')
        self.assertEqual(step.result.homogeneous_component(6), Poly.monomial(6, 0, Fraction(1, 5)))
        self.assertTrue(step.phi.is_identity_tangent)

    def test_x3y4_over_g6(self):
        step = reduce_step(g6, x ** 3 * y ** 4, 7)
        self.assertEqual(step.residual, [(Monomial(7, 0), Fraction(3, 35)), (Monomial(6, 1), Fraction(0))])
        self.assertTrue(step.formula_check)

    def test_random_tails_match_formula(self):
        rng = seeded(21)
        for (k, t) in CLAUSES:
            for _ in range(100):
                rho = sample_homogeneous(SampleSpec(t), rng)
                step = reduce_step(clause_leading(k), rho, t)
                with self.subTest(clause=clause_id(k, t), rho=str(rho)):
                    self.assertTrue(step.formula_check)
                    self.assertEqual(step.residual, residual_formula(k, t, rho))
                    self.assertTrue(jet_equal(step.result, clause_leading(k), t - 1))

    def test_rejects_non_generator_leading(self):
        with self.assertRaises(UnsupportedReduction):
            reduce_step(x ** 5, x ** 6, 6)
        with self.assertRaises(UnsupportedReduction):
            reduce_step(2 * f5, x ** 6, 6)

    def test_rejects_low_order_tail(self):
        with self.assertRaises(UnsupportedReduction):
            reduce_step(f5, x ** 4 * y, 6)

    def test_rejects_unsupported_pair(self):
        with self.assertRaises(UnsupportedReduction):
            reduce_step(f5, x ** 7, 7)

    def test_formula_needs_homogeneous_input(self):
        with self.assertRaises(NotHomogeneousError):
            residual_formula(5, 6, x ** 6 + x ** 7)


class OperatorTest(SimpleTestCase):

    def test_every_clause_operator_matches_the_solver(self):
        for k, t in CLAUSES:
            with self.subTest(k=k, t=t):
                verdict = verify_operators(k, t)
                self.assertTrue(verdict.matches)
                self.assertTrue(all(c.corrected is None for c in verdict.checks))


class FullReduceTest(SimpleTestCase):

    def test_f5_single_step(self):
        result = full_reduce(f5 + x ** 4 * y ** 2, 5)
        self.assertEqual(result.normal_form, f5 + Poly.monomial(6, 0, Fraction(1, 5)))
        self.assertEqual(result.jet_order, 6)
        self.assertEqual(len(result.steps), 1)

    def test_chained_steps_leave_only_residual_monomials(self):
        rng = seeded(8)
        for k in (6, 7):
            leading = clause_leading(k)
            tail = sum((sample_homogeneous(SampleSpec(d, coefficient_bound=3), rng)
                        for d in range(k + 1, 2 * k - 3)), Poly.zero())
            result = full_reduce(leading + tail, k)
            with self.subTest(k=k):
                self.assertEqual(result.normal_form.homogeneous_component(k), leading)
                for step in result.steps:
                    t = step.target_degree
                    allowed = set(CLAUSES[(k, t)].monomials)
                    self.assertTrue(set(result.normal_form.homogeneous_component(t).monomials()) <= allowed)
                    self.assertTrue(step.formula_check)

    def test_depth_limits(self):
        with self.assertRaises(UnsupportedReduction):
            full_reduce(f5, 5, depth=7)
        with self.assertRaises(UnsupportedReduction):
            full_reduce(g6, 6, depth=6)
        self.assertEqual(full_reduce(g7 + x ** 8, 7, depth=8).jet_order, 8)

    def test_rejects_unnormalized_leading(self):
        with self.assertRaises(UnsupportedReduction):
            full_reduce(3 * f5, 5)
        with self.assertRaises(UnsupportedReduction):
            full_reduce(x ** 4 + f5, 5)


class ClassifyTest(SimpleTestCase):

    def test_classical_orders(self):
        cases = {
            'regular': x + y ** 2,
            'Morse': x ** 2 - y ** 2 + x ** 3,
            'D4-minus': x ** 3 - 3 * x * y ** 2 + y ** 5,
            'X_{1,0}': harmonic_generator(4, HarmonicKind.F) + x ** 5,
        }
        for label, h in cases.items():
            with self.subTest(label=label):
                self.assertEqual(classify(h).label, label)
        self.assertEqual(classify(x ** 3 - 3 * x * y ** 2).jet_order, 3)
        self.assertEqual(classify(harmonic_generator(4, HarmonicKind.F)).jet_order, 4)

    def test_f5_plus_x6(self):
        result = classify(f5 + x ** 6)
        self.assertEqual(result.label, 'harmonic-k5')
        self.assertEqual(str(result.normal_form), 'x^5 - 10*x^3*y^2 + 5*x*y^4 + x^6')
        self.assertEqual(result.jet_order, 6)
        self.assertEqual(result.singularity_class, 'N_16')
        self.assertFalse(result.approx)

    def test_scaled_leading_term_is_normalized(self):
        result = classify(32 * f5 + 64 * x ** 6)
        self.assertEqual(result.normal_form, f5 + x ** 6)
        self.assertEqual(result.leading_map.entries, ((Fraction(1, 2), 0), (0, Fraction(1, 2))))

    def test_g5_only_normalizes_approximately(self):
        result = classify(harmonic_generator(5, HarmonicKind.G))
        self.assertTrue(result.approx)
        self.assertEqual(result.label, 'harmonic-k5')
        self.assertEqual(result.normal_form, f5)
        self.assertEqual(result.steps, [])

    def test_order_six(self):
        result = classify(g6 + x ** 7 + x * y ** 7)
        self.assertEqual(result.label, 'harmonic-k6')
        self.assertEqual(result.jet_order, 8)
        self.assertEqual([s.target_degree for s in result.steps], [7, 8])

    def test_unsupported(self):
        cases = (Poly.zero(), x + 1, x ** 5, x ** 2 + y ** 2, x ** 8)
        for h in cases:
            with self.subTest(h=str(h)):
                result = classify(h)
                self.assertFalse(result.supported)
                self.assertEqual(result.label, 'unsupported')
                self.assertTrue(result.diagnostic)

    def test_bad_depth_raises(self):
        with self.assertRaises(UnsupportedReduction):
            classify(f5, depth=9)


class UniquenessTest(SimpleTestCase):

    def test_uniqueness(self):
        self.assertTrue(uniqueness_check(Fraction(1, 2), Fraction(1, 2)))
        self.assertFalse(uniqueness_check(Fraction(1), Fraction(2)))

    def test_zero_modulus(self):
        self.assertTrue(uniqueness_check(Fraction(0), Fraction(0)))
        self.assertFalse(uniqueness_check(Fraction(0), Fraction(1)))
        self.assertTrue(all(c.holds for c in residual_invariance(Fraction(0))))

    def test_residual_invariance(self):
        checks = residual_invariance(Fraction(3))
        self.assertEqual([c.generator for c in checks], ['rotation', 'reflection'])
        self.assertTrue(all(c.holds for c in checks))
        self.assertEqual(checks[1].value, 2160)


class HandTableTest(SimpleTestCase):

    def test_h5_table_agrees(self):
        rng = seeded(4)
        for _ in range(5):
            rho = sample_homogeneous(SampleSpec(6), rng)
            check = crosscheck_hand_diffeo(5, 6, rho)
            self.assertTrue(check.agrees)
            self.assertEqual(check.clause, 'h5-deg6')

    def test_y6_tail_is_absorbed_to_x6(self):
        check = crosscheck_hand_diffeo(5, 6, y ** 6)
        self.assertEqual(check.hand_jet, x ** 6)
        self.assertEqual(check.solver_jet, x ** 6)

    def test_defects_are_reported(self):
        check = crosscheck_hand_diffeo(7, 10, x ** 10)
        self.assertEqual(len(check.defects), 3)

    def test_needs_homogeneous_tail(self):
        with self.assertRaises(NotHomogeneousError):
            crosscheck_hand_diffeo(5, 6, x ** 6 + y ** 7)
