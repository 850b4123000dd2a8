import numpy as np

from ..errors import NegativeExponent
from .matrix import ComplexMatrix, HermitianMatrix, PSDMatrix, PolarParts, as_matrix
from .tolerances import GRAM_FLOOR, RANK_TOL


__all__ = ['adjoint', 'eigh', 'abs_op', 'frac_power', 'polar_decompose', 'aluthge',
           'operator_norm', 'commutation_defect', 'matrix_polynomial']


def adjoint(t):
    """
    Conjugate transpose of a matrix.

    Parameters
    ----------
    t : ComplexMatrix

    Returns
    -------
    ComplexMatrix

    """
    t = as_matrix(t)
    return ComplexMatrix(t.data.conj().T)


def eigh(m):
    """
    Eigendecomposition of a Hermitian matrix, the numerical kernel that every
    matrix function in opineq goes through.

    Parameters
    ----------
    m : HermitianMatrix or array-like
        Matrix to decompose, checked against ``hermitian_tol``.

    Returns
    -------
    ndarray
        Ascending eigenvalues.
    ComplexMatrix
        Unitary matrix whose columns are the matching eigenvectors.

    """
    if not isinstance(m, HermitianMatrix):
        m = HermitianMatrix(m)

    values, vectors = m.spectrum
    return values.copy(), ComplexMatrix(vectors)


def _gram_spectrum(data):
    gram = data.conj().T @ data
    gram = 0.5 * (gram + gram.conj().T)

    values, vectors = np.linalg.eigh(gram)
    values = np.clip(values, 0, None)
    values[values <= GRAM_FLOOR * values[-1]] = 0

    return values, vectors


def abs_op(t):
    """
    Operator absolute value ``|T| = (T*T)^(1/2)``.

    Parameters
    ----------
    t : ComplexMatrix

    Returns
    -------
    PSDMatrix

    """
    t = as_matrix(t)
    values, vectors = _gram_spectrum(t.data)
    return PSDMatrix.from_spectrum(np.sqrt(values), vectors)


def frac_power(a, e):
    """
    Fractional power of a positive matrix through its spectrum, with the
    convention ``0^0 = 1`` so that any matrix to the power zero is the identity.

    Parameters
    ----------
    a : PSDMatrix
        Positive matrix.
    e : float
        Non-negative exponent.

    Returns
    -------
    PSDMatrix

    """
    if e < 0:
        raise NegativeExponent('Exponent must be non-negative, got %g' % e)

    if not isinstance(a, PSDMatrix):
        a = PSDMatrix(a)

    if e == 1:
        return a

    values, vectors = a.spectrum
    return PSDMatrix.from_spectrum(np.power(values, e), vectors)


def _canonical_basis(vectors):
    # fix the phase of every column, then order columns lexicographically
    columns = []
    for column in vectors.T:
        pivot = np.flatnonzero(np.abs(column) > 1e-12)
        if len(pivot):
            column = column * np.conj(column[pivot[0]]) / np.abs(column[pivot[0]])
        columns.append(column)

    columns.sort(key=lambda c: tuple(np.round(np.concatenate([c.real, c.imag]), 12)), reverse=True)
    return np.stack(columns, axis=1)


def polar_decompose(t):
    """
    Polar decomposition ``T = U |T|`` with a unitary ``U``.

    On the kernel of ``|T|`` the partial isometry is completed by pairing the
    kernel of ``|T|`` with the kernel of ``|T*|``, both taken in ascending
    eigenvalue order with a deterministic phase and ordering.

    Parameters
    ----------
    t : ComplexMatrix

    Returns
    -------
    PolarParts

    """
    t = as_matrix(t)
    n = t.n

    values, vectors = _gram_spectrum(t.data)
    sigma = np.sqrt(values)
    p = PSDMatrix.from_spectrum(sigma, vectors)

    if sigma[-1] == 0:
        return PolarParts(ComplexMatrix.identity(n), p)

    keep = sigma > RANK_TOL * sigma[-1]
    rank = int(np.sum(keep))

    range_in = vectors[:, keep]
    range_out = (t.data @ range_in) / sigma[keep]
    u = range_out @ range_in.conj().T

    if rank < n:
        kernel_in = _canonical_basis(vectors[:, ~keep])

        _, co_vectors = _gram_spectrum(t.data.conj().T)
        kernel_out = _canonical_basis(co_vectors[:, :n - rank])

        u = u + kernel_out @ kernel_in.conj().T

    # re-orthonormalise against round-off
    q, r = np.linalg.qr(u)
    diag = np.diag(r)
    phases = np.where(np.abs(diag) > 0, diag / np.where(np.abs(diag) > 0, np.abs(diag), 1), 1)
    u = q * phases

    return PolarParts(ComplexMatrix(u), p)


def aluthge(t):
    """
    Aluthge transform ``|T|^(1/2) U |T|^(1/2)``.

    Parameters
    ----------
    t : ComplexMatrix

    Returns
    -------
    ComplexMatrix

    """
    u, p = polar_decompose(t)
    root = frac_power(p, 0.5).data
    return ComplexMatrix(root @ u.data @ root)


def operator_norm(t):
    """
    Largest singular value, computed as the square root of the largest
    eigenvalue of ``T*T``.

    Parameters
    ----------
    t : ComplexMatrix

    Returns
    -------
    float

    """
    t = as_matrix(t)
    gram = t.data.conj().T @ t.data
    gram = 0.5 * (gram + gram.conj().T)
    largest = np.linalg.eigvalsh(gram)[-1]
    return float(np.sqrt(max(largest, 0.)))


def commutation_defect(a, b):
    """
    Norm of ``|A| B - B* |A|``, the defect of the hypothesis of the f,g inequality.

    Parameters
    ----------
    a : ComplexMatrix
    b : ComplexMatrix

    Returns
    -------
    float

    """
    a = as_matrix(a)
    b = a.check_same_dim(b)

    abs_a = abs_op(a).data
    defect = abs_a @ b.data - b.data.conj().T @ abs_a
    return operator_norm(ComplexMatrix(defect))


def matrix_polynomial(h, coeffs):
    """
    Evaluate a real polynomial, given by ascending coefficients, on a Hermitian matrix.

    Parameters
    ----------
    h : HermitianMatrix
    coeffs : sequence of float

    Returns
    -------
    HermitianMatrix

    """
    if not isinstance(h, HermitianMatrix):
        h = HermitianMatrix(h)

    values, vectors = h.spectrum
    image = np.polynomial.polynomial.polyval(values, np.asarray(coeffs, dtype=np.float64))
    data = (vectors * image) @ vectors.conj().T
    return HermitianMatrix(data, check=False)
