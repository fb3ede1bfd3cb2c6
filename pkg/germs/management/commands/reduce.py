from django.core.management.base import CommandParser

from germs.harmonic import HarmonicKind, harmonic_generator
from germs.management import ReportCommand
from germs.reduction import full_reduce

LEADING = {
    'f5': (5, HarmonicKind.F),
    'g6': (6, HarmonicKind.G),
    'g7': (7, HarmonicKind.G),
}


class Command(ReportCommand):
    help = 'Reduce leading + tail over an already normalized harmonic leading term'

    def add_report_arguments(self, parser: CommandParser):
        parser.add_argument('--leading', choices=sorted(LEADING), required=True)
        parser.add_argument('--tail', type=str, default='0', help='Terms of order above the leading term')
        parser.add_argument('--depth', type=int, default=None)

    def report(self, **options):
        k, kind = LEADING[options['leading']]
        tail = self.parse_poly(options['tail'], '--tail')
        return full_reduce(harmonic_generator(k, kind) + tail, k, options['depth'])
