from django.core.management.base import CommandParser

from germs.management import ReportCommand
from germs.management.ReportCommand import EXIT_DOMAIN
from germs.reduction import classify


class Command(ReportCommand):
    help = 'Classify a germ by the order of its harmonic leading term and reduce it to its normal form'

    def add_report_arguments(self, parser: CommandParser):
        parser.add_argument('--poly', type=str, required=True, help='The germ, e.g. "x^5 - 10*x^3*y^2 + 5*x*y^4 + x^6"')
        parser.add_argument('--depth', type=int, default=None,
                            help='Highest degree to reduce (default: 6 for order 5, 8 for order 6, 10 for order 7)')

    def report(self, **options):
        return classify(self.parse_poly(options['poly'], '--poly'), depth=options['depth'])

    def exit_status(self, result) -> int:
        return 0 if result.supported else EXIT_DOMAIN

    def failure_message(self, result) -> str:
        return f'unsupported germ: {result.diagnostic}'
