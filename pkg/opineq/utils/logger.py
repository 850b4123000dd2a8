
import sys
import logging


__all__ = ['LoggerManager', 'default_logger']


log_level = 'info'


_stderr = sys.stderr


_log_levels = {
    'info': logging.INFO,
    'debug': logging.DEBUG,
    'error': logging.ERROR,
    'warning': logging.WARNING,
}


class LocalLogger:
    def __init__(self, logger, log_level=logging.INFO):
        self._logger = logger
        self._log_level = log_level

    def log(self, msg, context=None):
        context = (context or '').upper()
        self._logger.log(self._log_level, msg, extra={'context': context})


class LoggerManager:
    """
    Class that manages the creation of loggers and the interface with them. It
    handles logging at different levels ``info``, ``debug``, ``error`` and ``warning``,
    each message optionally tagged with a context, such as the inequality being
    evaluated or the campaign stage.

    """

    def __init__(self):
        self._info_logger = None
        self._debug_logger = None
        self._error_logger = None
        self._warn_logger = None

        self._stream = _stderr

    def _set_up(self, fmt):
        handler = logging.StreamHandler(self._stream)
        handler.setFormatter(CustomFormatter(fmt))

        logger = logging.getLogger('opineq')
        logger.setLevel(_log_levels[log_level])
        logger.propagate = False
        if logger.hasHandlers():
            logger.handlers.clear()

        logger.addHandler(handler)

        self._info_logger = LocalLogger(logger, log_level=_log_levels['info'])
        self._debug_logger = LocalLogger(logger, log_level=_log_levels['debug'])
        self._error_logger = LocalLogger(logger, log_level=_log_levels['error'])
        self._warn_logger = LocalLogger(logger, log_level=_log_levels['warning'])

    def set_default(self):
        """
        Set up default loggers, printing only the message.

        Returns
        -------

        """
        self._set_up('%(message)s')

    def set_local(self):
        """
        Set up timestamped loggers, tagged with the message context.

        Returns
        -------

        """
        self._set_up('%(asctime)s - %(levelname)-10s %(context)-20s %(message)s')

    @staticmethod
    def set_level(level):
        """
        Set log level from options ``info``, ``debug``, ``error`` and ``warning``.

        Parameters
        ----------
        level : str
            Log level

        Returns
        -------

        """
        global log_level
        log_level = level

        logger = logging.getLogger('opineq')
        logger.setLevel(_log_levels[level])

    def info(self, buf, context=None):
        """
        Log message with level ``info``.

        Parameters
        ----------
        buf : str
            Message to log.
        context : str, optional
            Context tag of the message.

        Returns
        -------

        """
        if self._info_logger is None:
            return

        if log_level in ['error']:
            return

        self._info_logger.log(buf, context=context)

    def debug(self, buf, context=None):
        if self._debug_logger is None:
            return

        if log_level in ['info', 'error']:
            return

        self._debug_logger.log(buf, context=context)

    def error(self, buf, context=None):
        if self._error_logger is None:
            return

        self._error_logger.log(buf, context=context)

    def warning(self, buf, context=None):
        if self._warn_logger is None:
            return

        if log_level in ['error']:
            return

        self._warn_logger.log(buf, context=context)

    def warn(self, buf, context=None):
        self.warning(buf, context=context)


class CustomFormatter(logging.Formatter):
    def format(self, record):
        if not hasattr(record, 'context'):
            record.context = ''

        return super().format(record)


default_logger = LoggerManager()
default_logger.set_default()
