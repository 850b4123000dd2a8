
__version__ = '0.1'

from .utils import default_logger
from .errors import *
from .matcore import tolerances
from .catalog import (evaluate, evaluate_scalar, refinement_chain, list_registry,
                      ExponentParams, Variant, Verdict)


def logger():
    """
    Access the active logger.

    Returns
    -------
    LoggerManager

    """
    return default_logger
