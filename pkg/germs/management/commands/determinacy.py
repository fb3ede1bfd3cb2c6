from django.core.management.base import CommandParser

from germs.determinacy import determinacy_bound
from germs.management import ReportCommand


class Command(ReportCommand):
    help = 'Report the determinacy bound of f_k and the Jacobian inclusion certificates behind it'

    def add_report_arguments(self, parser: CommandParser):
        parser.add_argument('--k', type=int, required=True, dest='k', help='Order, 1 to 7')

    def report(self, **options):
        return determinacy_bound(options['k'])
