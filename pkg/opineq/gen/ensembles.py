"""
Seeded matrix ensembles. Every draw is a pure function of its ``GeneratorSpec``.

"""

import numpy as np

from ..errors import DimensionOutOfRange
from ..matcore import ComplexMatrix, HermitianMatrix, matrix_polynomial, abs_op
from .spec import GeneratorSpec, Family, OperatorPair, random_stream, MAX_DIM


__all__ = ['sample', 'sample_unit_vector', 'haar_unitary']


# stream tag of unit vectors, distinct from every family code
_vector_tag = 1000

_max_degree = 3


def _ginibre(rng, n):
    return (rng.standard_normal((n, n)) + 1j*rng.standard_normal((n, n))) / np.sqrt(2)


def _gue(rng, n):
    g = _ginibre(rng, n)
    return 0.5 * (g + g.conj().T)


def haar_unitary(rng, n):
    """
    Haar distributed unitary: QR of a Ginibre matrix with the phases of the
    diagonal of ``R`` moved into ``Q``.

    """
    q, r = np.linalg.qr(_ginibre(rng, n))
    phases = np.diagonal(r) / np.abs(np.diagonal(r))
    return q * phases


def _normal(rng, n):
    u = haar_unitary(rng, n)
    values = (rng.standard_normal(n) + 1j*rng.standard_normal(n)) / np.sqrt(2)
    return (u * values) @ u.conj().T


def _shift(n, t=1.):
    return np.diag(np.full(n - 1, float(t), dtype=np.complex128), k=1)


def _rank_one(rng, n):
    u = (rng.standard_normal(n) + 1j*rng.standard_normal(n)) / np.sqrt(2)
    v = (rng.standard_normal(n) + 1j*rng.standard_normal(n)) / np.sqrt(2)
    return np.outer(u, v.conj())


def _coefficients(rng, extra):
    if 'coeffs' in extra:
        return [float(c) for c in extra['coeffs']]

    degree = int(rng.integers(0, _max_degree + 1))
    return rng.standard_normal(degree + 1).tolist()


def _reid_pair(rng, n, extra):
    h = HermitianMatrix(_gue(rng, n))
    shift = -h.eigenvalues[0] + rng.uniform(0., 1.)
    a = HermitianMatrix(h.data + shift * np.eye(n))

    coeffs = _coefficients(rng, extra)
    b = matrix_polynomial(a, coeffs)
    return OperatorPair(ComplexMatrix(a), ComplexMatrix(b), coeffs)


def _fg_pair(rng, n, extra):
    a = ComplexMatrix(_ginibre(rng, n))

    coeffs = _coefficients(rng, extra)
    b = matrix_polynomial(abs_op(a), coeffs)
    return OperatorPair(a, ComplexMatrix(b), coeffs)


def _param_2x2(rng, extra):
    if 't' in extra:
        return _shift(2, extra['t'])

    if {'a', 'b', 'c'} <= set(extra):
        return np.array([[extra['a'], extra['b']], [0., extra['c']]], dtype=np.complex128)

    shape = int(rng.integers(0, 3))
    if shape == 0:
        return _shift(2, rng.uniform(0.1, 3.))

    if shape == 1:
        a, b, c = rng.uniform(-3., 3., size=3)
        return np.array([[a, b], [0., c]], dtype=np.complex128)

    return rng.uniform(0.5, 4.) * np.eye(2, dtype=np.complex128)


def sample(spec):
    """
    Draw the matrix, or matrix pair, described by ``spec``.

    Parameters
    ----------
    spec : GeneratorSpec or dict

    Returns
    -------
    ComplexMatrix or OperatorPair

    Raises
    ------
    DimensionOutOfRange
        For a dimension outside ``[1, 256]``, or other than 2 for ``PARAM_2X2``.

    """
    if not isinstance(spec, GeneratorSpec):
        spec = GeneratorSpec.from_json(spec)

    n = spec.dim
    family = spec.family
    extra = spec.extra
    rng = spec.stream()

    if family is Family.REID_PAIR:
        return _reid_pair(rng, n, extra)

    if family is Family.FG_PAIR:
        return _fg_pair(rng, n, extra)

    if family is Family.GINIBRE:
        data = _ginibre(rng, n)
    elif family is Family.GUE:
        data = _gue(rng, n)
    elif family is Family.HAAR_UNITARY:
        data = haar_unitary(rng, n)
    elif family is Family.NORMAL:
        data = _normal(rng, n)
    elif family is Family.NILPOTENT_SHIFT:
        data = _shift(n)
    elif family is Family.RANK_ONE:
        data = _rank_one(rng, n)
    else:
        if n != 2:
            raise DimensionOutOfRange('PARAM_2X2 draws have dimension 2, got %d' % n)
        data = _param_2x2(rng, extra)

    scale = float(extra.get('scale', 1.))
    return ComplexMatrix(scale * data)


def sample_unit_vector(dim, seed, index=0):
    """
    Complex Gaussian vector normalised to unit length.

    Parameters
    ----------
    dim : int
    seed : int
    index : int, optional
        Draw index within the stream of ``(seed, dim)``.

    Returns
    -------
    ndarray

    """
    if not 1 <= dim <= MAX_DIM:
        raise DimensionOutOfRange('Dimension must be in [1, %d], got %d' % (MAX_DIM, dim))

    rng = random_stream(seed, _vector_tag, dim, index)
    vector = (rng.standard_normal(dim) + 1j*rng.standard_normal(dim)) / np.sqrt(2)

    norm = np.linalg.norm(vector)
    while norm == 0:
        vector = rng.standard_normal(dim) + 1j*rng.standard_normal(dim)
        norm = np.linalg.norm(vector)

    return vector / norm
