import numpy as np

from ..errors import DimensionMismatch, ExponentDomain
from ..matcore.matrix import PSDMatrix


__all__ = ['FormPair', 'InfResult']


class FormPair:
    """
    Pair of positive forms with outer exponents, defining the function

        phi(x) = <a x, x>^u - <b x, x>^v

    on the unit sphere. Negative rounding residues of the forms are clipped
    to zero and ``0^u = 0``.

    Parameters
    ----------
    a : PSDMatrix
        First positive matrix.
    b : PSDMatrix
        Second positive matrix.
    u : float, optional
        Exponent applied to ``<a x, x>``, defaults to 1.
    v : float, optional
        Exponent applied to ``<b x, x>``, defaults to 1.

    """

    def __init__(self, a, b, u=1., v=1.):
        if not isinstance(a, PSDMatrix):
            a = PSDMatrix(a)

        if not isinstance(b, PSDMatrix):
            b = PSDMatrix(b)

        if a.n != b.n:
            raise DimensionMismatch('Forms of dimension %d and %d do not match' % (a.n, b.n))

        if not (u > 0 and v > 0):
            raise ExponentDomain('Exponents must be positive, got u=%g, v=%g' % (u, v))

        self.a = a
        self.b = b
        self.u = float(u)
        self.v = float(v)

    @property
    def n(self):
        return self.a.n

    def forms(self, vectors):
        """
        Values of both quadratic forms for one vector or a stack of row vectors.

        """
        vectors = np.asarray(vectors, dtype=np.complex128)
        alpha = np.einsum('...i,ij,...j->...', vectors.conj(), self.a.data, vectors).real
        beta = np.einsum('...i,ij,...j->...', vectors.conj(), self.b.data, vectors).real
        return np.clip(alpha, 0, None), np.clip(beta, 0, None)

    def phi(self, vectors):
        alpha, beta = self.forms(vectors)
        return np.power(alpha, self.u) - np.power(beta, self.v)

    def value(self, vectors):
        """
        Squared difference ``phi(x)^2`` for one vector or a stack of row vectors.

        """
        return self.phi(vectors)**2


class InfResult:
    """
    Infimum of a correction term over the unit sphere.

    Parameters
    ----------
    value : Interval
        Enclosure of the infimum; its upper end is attained at ``witness``.
    witness : ndarray
        Unit vector.
    attained_zero : bool
        Whether the infimum is certified to be zero.

    """

    def __init__(self, value, witness, attained_zero=False):
        self.value = value
        self.witness = np.asarray(witness, dtype=np.complex128)
        self.attained_zero = bool(attained_zero)

    def __repr__(self):
        return 'InfResult(%r, attained_zero=%s)' % (self.value, self.attained_zero)
