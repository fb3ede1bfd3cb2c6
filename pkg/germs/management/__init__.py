from germs.management.CliLoggerMixin import CliLoggerMixin
from germs.management.ReportCommand import ReportCommand
