import numpy as np
from scipy.special import gammaln, logsumexp

from ..errors import NoConvergence
from ..radius.interval import Interval, Method
from .matrix import HermitianMatrix, PSDMatrix, as_matrix
from .functions import operator_norm, matrix_polynomial
from .tolerances import HINT_TOL, NORMAL_TOL, NORM_REL, SPECTRAL_WIDTH_REL, GELFAND_MAX_K


__all__ = ['spectral_radius']


def _exact(value):
    return Interval.around(value, NORM_REL, method=Method.EXACT_FORMULA)


def _polynomial_radius(b, hint, coeffs):
    if hint.n != b.n:
        return None

    scale = max(1., operator_norm(b))
    h = hint.data
    if operator_norm(b.data @ h - h @ b.data) > HINT_TOL * scale * max(1., operator_norm(hint)):
        return None

    if coeffs is not None:
        image = matrix_polynomial(hint, coeffs)
        if operator_norm(b.data - image.data) > HINT_TOL * scale:
            return None

        values = hint.eigenvalues
        return float(np.max(np.abs(np.polynomial.polynomial.polyval(values, np.asarray(coeffs, dtype=np.float64)))))

    # without coefficients, b must be diagonal in the eigenbasis of the hint
    vectors = hint.eigenvectors
    rotated = vectors.conj().T @ b.data @ vectors
    diagonal = np.diag(rotated)
    if operator_norm(rotated - np.diag(diagonal)) > HINT_TOL * scale:
        return None

    return float(np.max(np.abs(diagonal)))


def _schur_lower(log_power, power, nu, n):
    # smallest r such that sum_{j<n} C(m, j) r^(m-j) nu^j >= ||b^m||,
    # which bounds the spectral radius from below through a Schur form b = Q (D + N) Q*
    j = np.arange(min(n, power + 1))
    log_binom = gammaln(power + 1) - gammaln(j + 1) - gammaln(power - j + 1)

    def log_envelope(r):
        return logsumexp(log_binom + (power - j) * np.log(r) + j * np.log(nu))

    if power < n and power * np.log(nu) >= log_power:
        return 0.

    lo, hi = 0., nu
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break

        if log_envelope(mid) >= log_power:
            hi = mid
        else:
            lo = mid

    return lo


def _gelfand(b, norm):
    n = b.n
    target = SPECTRAL_WIDTH_REL * max(1., norm)
    nu = 2 * norm

    lower = abs(np.trace(b.data)) / n
    det = abs(np.linalg.det(b.data))
    if det > 0:
        lower = max(lower, det ** (1 / n))

    upper = norm
    current = b.data / norm
    log_power = np.log(norm)
    power = 1

    for k in range(GELFAND_MAX_K + 1):
        upper = min(upper, np.exp(log_power / power))
        lower = max(lower, _schur_lower(log_power, power, nu, n))
        lower = min(lower, upper)

        if upper - lower <= target:
            return Interval(lower, upper, method=Method.GELFAND)

        if k == GELFAND_MAX_K:
            break

        square = current @ current
        square_norm = operator_norm(square)
        if square_norm == 0:
            return Interval(0., 0., method=Method.GELFAND)

        current = square / square_norm
        log_power = 2 * log_power + np.log(square_norm)
        power *= 2

    raise NoConvergence('Gelfand enclosure of the spectral radius did not reach width %e' % target,
                        interval=Interval(lower, upper, method=Method.GELFAND))


def spectral_radius(b, hint=None, coeffs=None):
    """
    Certified enclosure of the spectral radius without a non-symmetric eigensolver.

    Three paths are tried in order: when a Hermitian ``hint`` commutes with ``b``
    and ``b`` is the polynomial ``coeffs`` in the hint (or is diagonal in the
    eigenbasis of the hint), the radius is read off the spectrum of the hint;
    when ``b`` is normal the radius is its norm; otherwise the enclosure comes
    from norms of repeated squares of ``b``.

    Parameters
    ----------
    b : ComplexMatrix
        Matrix whose spectral radius is required.
    hint : PSDMatrix or HermitianMatrix, optional
        Hermitian matrix of which ``b`` is a function.
    coeffs : sequence of float, optional
        Ascending coefficients of the polynomial ``q`` with ``b = q(hint)``.

    Returns
    -------
    Interval
        Enclosure of ``max |lambda|``.

    Raises
    ------
    NoConvergence
        When the repeated-squaring enclosure stays wider than its target; the
        enclosure reached is attached to the error.

    """
    b = as_matrix(b)

    norm = operator_norm(b)
    if norm == 0:
        return Interval(0., 0., method=Method.EXACT_FORMULA)

    if hint is not None:
        if not isinstance(hint, HermitianMatrix):
            hint = PSDMatrix(hint)

        value = _polynomial_radius(b, hint, coeffs)
        if value is not None:
            return _exact(value)

    data = b.data
    defect = operator_norm(data @ data.conj().T - data.conj().T @ data)
    if defect <= NORMAL_TOL * max(1., norm**2):
        return _exact(norm)

    return _gelfand(b, norm)
