
import sys
import traceback


__all__ = ['OpineqError', 'NotHermitian', 'NotPSD', 'NegativeExponent', 'DimensionMismatch',
           'InvalidMatrix', 'NoConvergence', 'WidthNotReached', 'ExponentDomain', 'ParamsInvalid',
           'HypothesisViolated', 'UnknownId', 'ConfigInvalid', 'IoFailure', 'ParseError',
           'DimensionOutOfRange', 'CampaignFailure']


class OpineqError(Exception):
    """
    Base class of every error raised by opineq.

    """
    pass


class NotHermitian(OpineqError, ValueError):
    pass


class NotPSD(OpineqError, ValueError):
    pass


class NegativeExponent(OpineqError, ValueError):
    pass


class DimensionMismatch(OpineqError, ValueError):
    pass


class InvalidMatrix(OpineqError, ValueError):
    pass


class ExponentDomain(OpineqError, ValueError):
    pass


class ParamsInvalid(OpineqError, ValueError):
    pass


class DimensionOutOfRange(OpineqError, ValueError):
    pass


class UnknownId(OpineqError, KeyError):

    def __str__(self):
        return Exception.__str__(self)


class ParseError(OpineqError, ValueError):
    pass


class ConfigInvalid(OpineqError, ValueError):
    pass


class IoFailure(OpineqError, OSError):
    pass


class NoConvergence(OpineqError, RuntimeError):
    """
    Raised when an enclosure could not be narrowed to its target width.

    The best enclosure reached is kept in ``interval`` so that callers can
    still use it.

    Parameters
    ----------
    message : str
        Error message.
    interval : Interval
        Enclosure reached before giving up.

    """

    def __init__(self, message, interval=None):
        super().__init__(message)
        self.interval = interval


class WidthNotReached(NoConvergence):
    pass


class HypothesisViolated(OpineqError, ValueError):
    """
    Raised when the inputs of an inequality do not satisfy one of its hypotheses.

    Parameters
    ----------
    predicate : str
        Name of the failing predicate.
    message : str, optional
        Additional description.

    """

    def __init__(self, predicate, message=None):
        self.predicate = predicate
        message = message or 'hypothesis "%s" does not hold' % predicate
        super().__init__(message)


class CampaignFailure(OpineqError, RuntimeError):
    """
    Collects the errors raised by campaign workers, keeping their tracebacks.

    """

    def __init__(self, exc):
        self.errors = []
        self.add(exc)
        super().__init__(exc)

    def add(self, exc):
        if isinstance(exc, CampaignFailure):
            self.errors += exc.errors
        else:
            try:
                raise exc
            except Exception:
                et, ev, tb = sys.exc_info()
                tb = traceback.format_tb(tb)
                tb = ''.join(tb)
                self.errors.append((et, ev, tb))

    def __str__(self):
        error_str = str(self.errors[-1][1]) + '\n\nError stack:\n\n'

        for error in self.errors:
            et, ev, tb = error
            error_str += 'Traceback (most recent call last):\n'
            error_str += f'{tb}{et.__name__}: {str(ev)}\n\n'

        return error_str
