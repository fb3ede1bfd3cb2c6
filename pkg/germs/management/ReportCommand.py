"""
Base class shared by every ``germ`` verb.
"""
import logging
import os

from django.core.management import BaseCommand, CommandError
from django.core.management.base import CommandParser

from germs.exceptions import GermError, PolynomialSyntaxError, UnknownPlanError
from germs.grammar import parse
from germs.management.CliLoggerMixin import CliLoggerMixin
from germs.poly import Poly
from germs.reporting import emit_report

log = logging.getLogger(__name__)

EXIT_DOMAIN = 1
EXIT_USAGE = 2
EXIT_COUNTEREXAMPLE = 3


class ReportCommand(CliLoggerMixin, BaseCommand):
    """
    A management command which computes a single report and prints it, as canonical text or (``--json``) as JSON.

    Subclasses implement :meth:`.add_report_arguments` and :meth:`.report`, and may override :meth:`.exit_status`
    to turn a successfully computed report into a non-zero exit code.

    Exit codes: ``1`` domain error, ``2`` usage or polynomial syntax error, ``3`` verify counterexample. Reports go
    to the output stream, everything else to the error stream.
    """

    def add_report_arguments(self, parser: CommandParser):
        pass

    def add_arguments(self, parser: CommandParser):
        self.add_report_arguments(parser)
        parser.add_argument('--json', action='store_true', dest='json', default=False,
                            help='Emit the report as JSON')
        parser.add_argument('--quiet', action='store_true', dest='quiet', default=False,
                            help='Print nothing on success, only the exit code reports the outcome')

    def execute(self, *args, **options):
        if os.environ.get('NO_COLOR'):
            options['no_color'] = True
        return super().execute(*args, **options)

    @staticmethod
    def parse_poly(text: str, flag: str) -> Poly:
        try:
            return parse(text)
        except PolynomialSyntaxError as e:
            raise CommandError(f'{flag}: {e}', returncode=EXIT_USAGE)

    def report(self, **options):
        raise NotImplementedError(f'{type(self).__name__}.report must be implemented!')

    def exit_status(self, result) -> int:
        return 0

    def handle(self, *args, **options):
        try:
            result = self.report(**options)
        except (PolynomialSyntaxError, UnknownPlanError, ValueError) as e:
            raise CommandError(str(e), returncode=EXIT_USAGE)
        except GermError as e:
            log.info('%s failed: %s: %s', type(self).__module__, type(e).__name__, e)
            raise CommandError(f'{type(e).__name__}: {e}', returncode=EXIT_DOMAIN)

        if not options['quiet']:
            self.stdout.write(emit_report(result, json=options['json']))
        status = self.exit_status(result)
        if status:
            raise CommandError(self.failure_message(result), returncode=status)

    def failure_message(self, result) -> str:
        return 'command failed'
