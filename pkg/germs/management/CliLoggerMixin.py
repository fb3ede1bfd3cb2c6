from django.conf import settings
from germclass.settings import config_logger
import germclass.settings.log


class CliLoggerMixin:
    """
    A very simple class mixin which uses :py:func:`settings.log.config_logger` to reset all configured loggers
    and make sure they output their logs to the CLI logs folder, not the default logs folder.
    """
    def __init__(self, *args, **kwargs):
        """
        Basic usage:

        >>> class MyCommand(CliLoggerMixin, BaseCommand):
        >>>     def __init__(self, *args, **kwargs):
        >>>         super(MyCommand, self).__init__(*args, **kwargs)

        :param args: Not necessary. Simply passed to any parent constructor.
        :param kwargs: Not necessary. Simply passed to any parent constructor.
        """
        # Make sure the default logger doesn't run after we've changed the logger settings.
        germclass.settings.log.LOGGER_IS_SETUP = True
        # Point all configured loggers to output to the cli folder
        config_logger(*settings.LOGGER_NAMES, log_dir=settings.BASE_CLI_LOGS)
        super(CliLoggerMixin, self).__init__(*args, **kwargs)
