from django.core.management.base import CommandParser

from germs.management import ReportCommand
from germs.reporting import stabilizer_report


class Command(ReportCommand):
    help = 'List the dihedral stabilizer of f_k and check each element against f_k and g_k'

    def add_report_arguments(self, parser: CommandParser):
        parser.add_argument('--k', type=int, required=True, dest='k')

    def report(self, **options):
        return stabilizer_report(options['k'])
