import logging

from django.core.management.base import CommandParser

from germs import verify
from germs.management import ReportCommand
from germs.management.ReportCommand import EXIT_COUNTEREXAMPLE

log = logging.getLogger(__name__)


class Command(ReportCommand):
    help = 'Re-check a clause of the classification on seeded random inputs'

    def add_report_arguments(self, parser: CommandParser):
        target = parser.add_mutually_exclusive_group(required=True)
        target.add_argument('--theorem', type=str, default=None,
                            help='Statement id: 1.2, 1.3.2, 1.3.3, 1.4.2, 1.4.3, 1.4.4, '
                                 'cor1.5, cor1.6, cor1.7, prop2.4')
        target.add_argument('--clause', type=str, default=None,
                            help='e.g. h5-deg6, absorb-h7, crosscheck-h6-deg8, uniqueness-h5, determinacy')
        parser.add_argument('--trials', type=int, default=None)
        parser.add_argument('--seed', type=int, default=None)
        parser.add_argument('--bound', type=int, default=None, dest='bound',
                            help='Coefficient bound B, coefficients are drawn from [-B, B]')

    def report(self, **options):
        plan = verify.get_plan(
            options['theorem'] or options['clause'],
            trials=options['trials'], seed=options['seed'], coefficient_bound=options['bound'],
        )
        return plan.run()

    def exit_status(self, result) -> int:
        if not result.counterexample:
            return 0
        # Reproducing details always reach the error stream, even with --quiet
        for f in result.failures:
            self.stderr.write(f'counterexample: clause {result.clause} trial {f.index} seed {f.seed} '
                              f'(run seed {result.seed}, bound {result.coefficient_bound}): {f.input}')
            if f.message:
                self.stderr.write(f'  {f.message}')
        return EXIT_COUNTEREXAMPLE

    def failure_message(self, result) -> str:
        return f'{len(result.failures)} counterexample(s) for {result.clause}'
