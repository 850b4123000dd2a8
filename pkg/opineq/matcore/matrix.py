import numpy as np
from cached_property import cached_property

from ..errors import NotHermitian, NotPSD, InvalidMatrix, DimensionMismatch, ParseError
from .tolerances import HERMITIAN_TOL, PSD_TOL


__all__ = ['ComplexMatrix', 'HermitianMatrix', 'PSDMatrix', 'PolarParts',
           'as_matrix', 'as_vector', 'vector_to_json', 'vector_from_json']


class ComplexMatrix:
    """
    Dense square matrix with complex entries, the basic operand of every
    inequality. The underlying array is stored as read-only ``complex128``.

    Parameters
    ----------
    data : array-like
        Square two-dimensional array of finite entries.

    """

    def __init__(self, data, **kwargs):
        if isinstance(data, ComplexMatrix):
            data = data.data

        data = np.array(data, dtype=np.complex128)

        if data.ndim != 2 or data.shape[0] != data.shape[1]:
            raise InvalidMatrix('Matrix must be square, got shape %s' % (data.shape,))

        if data.shape[0] < 1:
            raise InvalidMatrix('Matrix must have dimension at least 1')

        if not np.all(np.isfinite(data)):
            raise InvalidMatrix('Matrix entries must be finite')

        data.setflags(write=False)
        self._data = data

    @property
    def data(self):
        return self._data

    @property
    def n(self):
        return self._data.shape[0]

    @property
    def shape(self):
        return self._data.shape

    @classmethod
    def identity(cls, n):
        return cls(np.eye(n))

    @classmethod
    def zeros(cls, n):
        return cls(np.zeros((n, n)))

    def check_same_dim(self, other):
        other = as_matrix(other)
        if other.n != self.n:
            raise DimensionMismatch('Dimensions %d and %d do not match' % (self.n, other.n))

        return other

    def __matmul__(self, other):
        other = self.check_same_dim(other)
        return ComplexMatrix(self._data @ other.data)

    def __add__(self, other):
        other = self.check_same_dim(other)
        return ComplexMatrix(self._data + other.data)

    def __sub__(self, other):
        other = self.check_same_dim(other)
        return ComplexMatrix(self._data - other.data)

    def __mul__(self, scalar):
        return ComplexMatrix(scalar * self._data)

    __rmul__ = __mul__

    def __neg__(self):
        return ComplexMatrix(-self._data)

    def __eq__(self, other):
        if not isinstance(other, ComplexMatrix):
            return NotImplemented

        return self.n == other.n and np.array_equal(self._data, other.data)

    def __hash__(self):
        return hash(self._data.tobytes())

    def allclose(self, other, atol=1e-10):
        other = as_matrix(other)
        return self.n == other.n and bool(np.allclose(self._data, other.data, rtol=0, atol=atol))

    def submatrix(self, indices):
        indices = np.asarray(indices, dtype=int)
        return ComplexMatrix(self._data[np.ix_(indices, indices)])

    def to_json(self):
        """
        Serialise the matrix as ``{"n", "re", "im"}`` with row-major nested lists.

        Returns
        -------
        dict

        """
        return {
            'n': int(self.n),
            're': self._data.real.tolist(),
            'im': self._data.imag.tolist(),
        }

    @classmethod
    def from_json(cls, doc):
        """
        Build a matrix from its JSON document.

        Parameters
        ----------
        doc : dict
            Document with keys ``n``, ``re`` and ``im``.

        Returns
        -------
        ComplexMatrix

        """
        if not isinstance(doc, dict):
            raise ParseError('Matrix document must be a JSON object')

        for key in ['n', 're', 'im']:
            if key not in doc:
                raise ParseError('Matrix document is missing key "%s"' % key)

        n = doc['n']
        if not isinstance(n, int) or isinstance(n, bool) or n < 1:
            raise ParseError('Matrix dimension "n" must be a positive integer')

        try:
            re = np.array(doc['re'], dtype=np.float64)
            im = np.array(doc['im'], dtype=np.float64)
        except (TypeError, ValueError) as exc:
            raise ParseError('Matrix entries must be numbers: %s' % exc)

        if re.shape != (n, n) or im.shape != (n, n):
            raise ParseError('Matrix arrays must have shape (%d, %d)' % (n, n))

        try:
            return cls(re + 1j*im)
        except InvalidMatrix as exc:
            raise ParseError(str(exc))

    def __repr__(self):
        return '%s(n=%d)' % (self.__class__.__name__, self.n)


class HermitianMatrix(ComplexMatrix):
    """
    Self-adjoint matrix. Inputs within ``hermitian_tol`` of being Hermitian
    are accepted and symmetrised.

    Parameters
    ----------
    data : array-like
        Square array.
    check : bool, optional
        Whether to check the Hermitian defect, defaults to True.

    """

    def __init__(self, data, **kwargs):
        check = kwargs.pop('check', True)
        super().__init__(data, **kwargs)

        data = self._data
        if check:
            scale = np.linalg.norm(data)
            defect = np.linalg.norm(data - data.conj().T)
            if defect > HERMITIAN_TOL * scale:
                raise NotHermitian('Hermitian defect %e exceeds tolerance for norm %e' % (defect, scale))

        data = 0.5 * (data + data.conj().T)
        data.setflags(write=False)
        self._data = data

    @cached_property
    def spectrum(self):
        """
        Ascending eigenvalues and matching unitary eigenvector matrix.

        """
        values, vectors = np.linalg.eigh(self._data)
        return values, vectors

    @property
    def eigenvalues(self):
        return self.spectrum[0]

    @property
    def eigenvectors(self):
        return self.spectrum[1]


class PSDMatrix(HermitianMatrix):
    """
    Positive semi-definite matrix. Eigenvalues in ``[-psd_tol * ||a||, 0)``
    are clipped to zero; more negative eigenvalues raise ``NotPSD``.

    Parameters
    ----------
    data : array-like
        Square Hermitian array.
    check : bool, optional
        Whether to check the Hermitian defect, defaults to True.

    """

    def __init__(self, data, **kwargs):
        super().__init__(data, **kwargs)

        values, vectors = self.spectrum
        scale = np.max(np.abs(values))
        if values[0] < -PSD_TOL * scale:
            raise NotPSD('Smallest eigenvalue %e is below tolerance for norm %e' % (values[0], scale))

        if values[0] < 0:
            values = np.clip(values, 0, None)
            data = (vectors * values) @ vectors.conj().T
            data = 0.5 * (data + data.conj().T)
            data.setflags(write=False)
            self._data = data

        self.spectrum = (values, vectors)

    @property
    def eigen_floor(self):
        return float(self.eigenvalues[0])

    @classmethod
    def from_spectrum(cls, values, vectors):
        """
        Assemble ``V diag(values) V*`` from a non-negative spectrum.

        Parameters
        ----------
        values : ndarray
            Ascending non-negative eigenvalues.
        vectors : ndarray
            Unitary matrix of eigenvectors.

        Returns
        -------
        PSDMatrix

        """
        values = np.clip(np.asarray(values, dtype=np.float64), 0, None)
        vectors = np.asarray(vectors, dtype=np.complex128)
        data = (vectors * values) @ vectors.conj().T

        matrix = cls.__new__(cls)
        ComplexMatrix.__init__(matrix, 0.5 * (data + data.conj().T))
        matrix.spectrum = (values, vectors)

        return matrix


class PolarParts:
    """
    Factors of the polar decomposition ``T = U |T|``.

    Parameters
    ----------
    u : ComplexMatrix
        Unitary factor.
    p : PSDMatrix
        Positive factor ``|T|``.

    """

    def __init__(self, u, p):
        self.u = u
        self.p = p

    def __iter__(self):
        return iter((self.u, self.p))


def as_matrix(value):
    if isinstance(value, ComplexMatrix):
        return value

    if isinstance(value, dict):
        return ComplexMatrix.from_json(value)

    return ComplexMatrix(value)


def as_vector(value, n=None):
    vector = np.asarray(value, dtype=np.complex128).reshape(-1)

    if n is not None and vector.shape[0] != n:
        raise DimensionMismatch('Vector of length %d does not match dimension %d' % (vector.shape[0], n))

    if not np.all(np.isfinite(vector)):
        raise InvalidMatrix('Vector entries must be finite')

    return vector


def vector_to_json(vector):
    vector = np.asarray(vector, dtype=np.complex128)
    return {'re': vector.real.tolist(), 'im': vector.imag.tolist()}


def vector_from_json(doc):
    try:
        re = np.array(doc['re'], dtype=np.float64)
        im = np.array(doc['im'], dtype=np.float64)
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError('Invalid vector document: %s' % exc)

    if re.ndim != 1 or re.shape != im.shape:
        raise ParseError('Vector arrays must be one-dimensional and of equal length')

    return re + 1j*im
