import numpy as np

from ..errors import DimensionMismatch
from ..matcore.matrix import PSDMatrix, HermitianMatrix
from ..matcore.tolerances import EIGEN_SLACK
from ..radius.interval import Interval, Method
from .forms import FormPair, InfResult


__all__ = ['inf_sq_form_diff', 'inf_form_diff']


def _difference_spectrum(a, b):
    if not isinstance(a, HermitianMatrix):
        a = PSDMatrix(a)

    if not isinstance(b, HermitianMatrix):
        b = PSDMatrix(b)

    if a.n != b.n:
        raise DimensionMismatch('Forms of dimension %d and %d do not match' % (a.n, b.n))

    difference = HermitianMatrix(a.data - b.data, check=False)
    values, vectors = difference.spectrum

    scale = np.max(np.abs(a.eigenvalues)) + np.max(np.abs(b.eigenvalues))
    error = EIGEN_SLACK * a.n * scale

    return a, b, values, vectors, error


def inf_sq_form_diff(a, b):
    """
    Exact infimum over unit vectors of ``(<a x, x> - <b x, x>)^2``.

    The quadratic form of ``a - b`` ranges over ``[lambda_min, lambda_max]``, so
    the infimum is zero when that range contains zero and the smaller squared
    end otherwise.

    Parameters
    ----------
    a : PSDMatrix
    b : PSDMatrix

    Returns
    -------
    InfResult

    """
    a, b, values, vectors, error = _difference_spectrum(a, b)
    pair = FormPair(a, b)

    low, high = values[0], values[-1]

    if low <= 0 <= high:
        if high - low > 0:
            weight = -low / (high - low)
            witness = np.sqrt(1 - weight) * vectors[:, 0] + np.sqrt(weight) * vectors[:, -1]
        else:
            witness = vectors[:, 0]

        witness = witness / np.linalg.norm(witness)
        attained = float(pair.value(witness))
        return InfResult(Interval(0., attained, method=Method.EXACT_FORMULA), witness, attained_zero=True)

    if low > 0:
        nearest, witness = low, vectors[:, 0]
    else:
        nearest, witness = -high, vectors[:, -1]

    attained = float(pair.value(witness))
    lower = max(nearest - error, 0.)**2
    upper = max((nearest + error)**2, attained)

    return InfResult(Interval(lower, upper, method=Method.EXACT_FORMULA), witness, attained_zero=False)


def inf_form_diff(a, b):
    """
    Exact infimum over unit vectors of ``<a x, x> - <b x, x>``, that is the
    smallest eigenvalue of ``a - b``.

    Parameters
    ----------
    a : PSDMatrix
    b : PSDMatrix

    Returns
    -------
    InfResult

    """
    a, b, values, vectors, error = _difference_spectrum(a, b)

    low = values[0]
    witness = vectors[:, 0]

    return InfResult(Interval(low - error, low + error, method=Method.EXACT_FORMULA), witness,
                     attained_zero=abs(low) <= error)
