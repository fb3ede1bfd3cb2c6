from django.core.management.base import CommandParser

from germs.management import ReportCommand
from germs.reporting import laplacian_report


class Command(ReportCommand):
    help = 'Apply a power of the Laplacian to a polynomial'

    def add_report_arguments(self, parser: CommandParser):
        parser.add_argument('--poly', type=str, required=True)
        parser.add_argument('--power', type=int, default=1, help='Power l of the Laplacian (default: 1)')

    def report(self, **options):
        return laplacian_report(self.parse_poly(options['poly'], '--poly'), options['power'])
