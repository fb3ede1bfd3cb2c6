from django.test import SimpleTestCase, override_settings

from germs import verify
from germs.exceptions import UnknownPlanError
from germs.verify.base import BasePlan, TrialOutcome, trial_seed


class FailingPlan(BasePlan):
    provides = ['always-fails']

    @property
    def jet_order(self) -> int:
        return 1

    def trial(self, index, rng):
        return TrialOutcome(index, 0, ok=index % 2 == 0, input=f'trial {index}', message='odd index')


class RegistryTest(SimpleTestCase):

    def test_lists_every_clause(self):
        clauses = verify.list_clauses()
        for clause in ('h5-deg6', 'h6-deg7', 'h6-deg8', 'h7-deg8', 'h7-deg9', 'h7-deg10', 'absorb-h5', 'absorb-h6',
                       'absorb-h7', 'crosscheck-h5-deg6', 'crosscheck-h7-deg10', 'uniqueness-h5', 'determinacy'):
            self.assertIn(clause, clauses)

    def test_unknown_clause(self):
        with self.assertRaises(UnknownPlanError) as cm:
            verify.get_plan('h9-deg99')
        self.assertIn('h5-deg6', str(cm.exception))
        self.assertFalse(verify.has_plan('h9-deg99'))

    def test_statement_ids_resolve_to_clauses(self):
        expected = {
            '1.2': 'h5-deg6', '1.3.2': 'h6-deg7', '1.3.3': 'h6-deg8', '1.4.2': 'h7-deg8', '1.4.3': 'h7-deg9',
            '1.4.4': 'h7-deg10', 'cor1.5': 'absorb-h5', 'cor1.6': 'absorb-h6', 'cor1.7': 'absorb-h7',
            'prop2.4': 'determinacy',
        }
        self.assertEqual(verify.list_statements(), sorted(expected))
        for statement_id, clause in expected.items():
            with self.subTest(statement_id=statement_id):
                self.assertEqual(verify.resolve_clause(statement_id), clause)
                self.assertEqual(verify.get_plan(statement_id, trials=1).clause, clause)
        self.assertEqual(verify.resolve_clause('uniqueness-h5'), 'uniqueness-h5')
        with self.assertRaises(UnknownPlanError):
            verify.resolve_clause('1.9')

    def test_reports_carry_the_statement_label(self):
        self.assertEqual(verify.get_plan('1.4.3', trials=1).statement, 'Thm1.4(3)')
        self.assertEqual(verify.get_plan('uniqueness-h5', trials=1).statement, 'Thm1.2(3)')
        self.assertEqual(verify.get_plan('crosscheck-h6-deg8', trials=1).statement, 'Thm1.3(3)')
        self.assertIsNone(FailingPlan('always-fails', trials=1).statement)
        report = verify.get_plan('prop2.4', trials=1, seed=3).run(workers=1)
        self.assertEqual(report.statement, 'Prop2.4')

    @override_settings(VERIFY_PLANS=['Residuals', 'NoSuchPlan'])
    def test_broken_plan_module_is_skipped(self):
        try:
            verify.reload_plans()
            self.assertTrue(verify.has_plan('h5-deg6'))
            self.assertFalse(verify.has_plan('absorb-h5'))
        finally:
            with self.settings(VERIFY_PLANS=['Residuals', 'Absorption', 'Crosscheck', 'Uniqueness', 'Determinacy']):
                verify.reload_plans()

    def test_plan_argument_validation(self):
        with self.assertRaises(ValueError):
            verify.get_plan('h5-deg6', trials=0)
        with self.assertRaises(ValueError):
            verify.get_plan('h5-deg6', coefficient_bound=0)


class BasePlanTest(SimpleTestCase):

    def test_trial_seeds_are_independent(self):
        self.assertEqual(trial_seed(42, 3), trial_seed(42, 3))
        self.assertNotEqual(trial_seed(42, 3), trial_seed(42, 4))
        self.assertNotEqual(trial_seed(42, 3), trial_seed(43, 3))

    def test_failures_are_reported(self):
        report = FailingPlan('always-fails', trials=5, seed=1).run(workers=1)
        self.assertTrue(report.counterexample)
        self.assertEqual(report.passed, 3)
        self.assertEqual(report.summary, '3/5 trials pass')
        self.assertEqual([f.index for f in report.failures], [1, 3])
        self.assertEqual(report.failures[0].seed, trial_seed(1, 1))

    def test_rejects_foreign_clause(self):
        with self.assertRaises(ValueError):
            FailingPlan('h5-deg6')


class ResidualPlanTest(SimpleTestCase):

    def test_h5_deg6(self):
        report = verify.get_plan('h5-deg6', trials=20, seed=42).run(workers=1)
        self.assertEqual(report.summary, '20/20 residuals match Δ³ formula')
        self.assertFalse(report.counterexample)
        self.assertTrue(report.operator_verdict.matches)
        self.assertEqual(report.jet_order, 6)
        self.assertEqual(report.prng['algorithm'], 'PCG64')

    def test_every_residual_clause_passes(self):
        for clause in ('h6-deg7', 'h6-deg8', 'h7-deg8', 'h7-deg9', 'h7-deg10'):
            with self.subTest(clause=clause):
                report = verify.get_plan(clause, trials=3, seed=7).run(workers=1)
                self.assertEqual(report.passed, 3)

    def test_runs_are_deterministic(self):
        a = verify.get_plan('h6-deg7', trials=5, seed=99).run(workers=1)
        b = verify.get_plan('h6-deg7', trials=5, seed=99).run(workers=1)
        self.assertEqual(a, b)

    def test_worker_pool_matches_serial_run(self):
        plan = verify.get_plan('h5-deg6', trials=4, seed=5)
        self.assertEqual(plan.run(workers=2), plan.run(workers=1))


class OtherPlanTest(SimpleTestCase):

    def test_absorption(self):
        for clause in ('absorb-h5', 'absorb-h6', 'absorb-h7'):
            with self.subTest(clause=clause):
                report = verify.get_plan(clause, trials=3, seed=3).run(workers=1)
                self.assertFalse(report.counterexample)
                self.assertEqual(report.summary, '3/3 polyharmonic tails absorbed')
        self.assertEqual(verify.get_plan('absorb-h7').jet_order, 10)

    def test_strict_crosscheck(self):
        report = verify.get_plan('crosscheck-h5-deg6', trials=5, seed=11).run(workers=1)
        self.assertEqual(report.summary, '5/5 hand-table jets agree with the solver')
        self.assertFalse(report.counterexample)

    def test_lenient_crosscheck_never_fails(self):
        report = verify.get_plan('crosscheck-h7-deg10', trials=3, seed=11).run(workers=1)
        self.assertFalse(report.counterexample)
        self.assertTrue(any('unbalanced parenthesis' in n for n in report.notes))

    def test_uniqueness(self):
        report = verify.get_plan('uniqueness-h5', trials=6, seed=2).run(workers=1)
        self.assertEqual(report.passed, 6)
        self.assertEqual(report.jet_order, 6)

    def test_uniqueness_survives_a_zero_modulus(self):
        report = verify.get_plan('uniqueness-h5', trials=100, seed=42).run(workers=1)
        self.assertEqual(report.passed, 100)
        self.assertFalse(report.counterexample)

    def test_determinacy(self):
        report = verify.get_plan('determinacy', trials=3, seed=2).run(workers=1)
        self.assertEqual(report.passed, 3)
        self.assertEqual(report.jet_order, 11)
