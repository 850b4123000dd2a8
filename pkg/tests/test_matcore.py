import numpy as np
import pytest

from opineq.errors import NotHermitian, NotPSD, NegativeExponent, DimensionMismatch, InvalidMatrix, ParseError
from opineq.matcore import (ComplexMatrix, HermitianMatrix, PSDMatrix, adjoint, eigh, abs_op, frac_power,
                            polar_decompose, aluthge, operator_norm, commutation_defect, matrix_polynomial,
                            tolerances, PSD_TOL)

from conftest import ginibre, random_psd


def test_matrix_validation():
    with pytest.raises(InvalidMatrix):
        ComplexMatrix(np.ones((2, 3)))

    with pytest.raises(InvalidMatrix):
        ComplexMatrix([[np.nan, 0], [0, 1]])

    with pytest.raises(DimensionMismatch):
        ComplexMatrix.identity(2) @ ComplexMatrix.identity(3)


def test_matrix_is_read_only():
    t = ComplexMatrix.identity(2)
    with pytest.raises(ValueError):
        t.data[0, 0] = 2


def test_matrix_document(rng):
    t = ginibre(rng, 3)
    assert ComplexMatrix.from_json(t.to_json()) == t

    with pytest.raises(ParseError):
        ComplexMatrix.from_json({'n': 2, 're': [[1, 0], [0, 1]]})

    with pytest.raises(ParseError):
        ComplexMatrix.from_json({'n': 2, 're': [[1, 0]], 'im': [[0, 0]]})


def test_hermitian_and_psd_checks():
    with pytest.raises(NotHermitian):
        HermitianMatrix([[0, 1], [0, 0]])

    with pytest.raises(NotPSD):
        PSDMatrix(np.diag([-1., 1.]))

    # tiny negative eigenvalues are clipped
    a = PSDMatrix(np.diag([-0.1 * PSD_TOL, 1.]))
    assert a.eigen_floor == 0


def test_tolerances_are_read_only():
    assert tolerances['psd'] == PSD_TOL
    with pytest.raises(TypeError):
        tolerances['psd'] = 1.


def test_adjoint(shift, rng):
    assert adjoint(ComplexMatrix.identity(2)) == ComplexMatrix.identity(2)
    assert adjoint(shift) == ComplexMatrix([[0, 0], [1, 0]])

    t = ginibre(rng, 5)
    assert adjoint(adjoint(t)) == t


def test_eigh(rng):
    values, vectors = eigh(np.diag([3., 1.]))
    np.testing.assert_allclose(values, [1., 3.])
    np.testing.assert_allclose(np.abs(vectors.data), [[0, 1], [1, 0]], atol=1e-12)

    values, _ = eigh(np.eye(4))
    np.testing.assert_allclose(values, np.ones(4))

    g = ginibre(rng, 6).data
    m = 0.5 * (g + g.conj().T)
    values, vectors = eigh(m)
    v = vectors.data

    assert np.all(np.diff(values) >= 0)
    assert np.linalg.norm((v * values) @ v.conj().T - m, 2) < 1e-10 * max(1., np.linalg.norm(m, 2))
    assert np.linalg.norm(v.conj().T @ v - np.eye(6), 2) < 1e-10


def test_abs_op(shift, rng):
    assert abs_op(shift).allclose(np.diag([0., 1.]))
    assert abs_op(ComplexMatrix.identity(3)).allclose(np.eye(3))

    t = ginibre(rng, 4)
    p = abs_op(t).data
    assert np.linalg.norm(p @ p - t.data.conj().T @ t.data, 2) < 1e-9 * max(1., operator_norm(t)**2)


def test_frac_power(rng):
    assert frac_power(np.diag([0., 1.]), 0).allclose(np.eye(2))
    assert frac_power(np.diag([4., 9.]), 0.5).allclose(np.diag([2., 3.]))

    a = PSDMatrix(random_psd(rng, 5))
    assert frac_power(a, 1) is a
    assert np.linalg.norm(frac_power(a, 2).data - a.data @ a.data, 2) < 1e-10 * max(1., operator_norm(a)**2)

    with pytest.raises(NegativeExponent):
        frac_power(a, -0.5)


def test_polar_decompose(shift, rng):
    u, p = polar_decompose(ComplexMatrix.identity(3))
    assert u.allclose(np.eye(3))
    assert p.allclose(np.eye(3))

    u, p = polar_decompose(shift)
    assert p.allclose(np.diag([0., 1.]))
    assert (u @ p).allclose(shift, atol=1e-12)
    assert np.linalg.norm(u.data.conj().T @ u.data - np.eye(2), 2) < 1e-10

    t = ginibre(rng, 4)
    u, p = polar_decompose(t)
    expected = t.data @ np.linalg.inv(p.data)
    assert np.linalg.norm(u.data - expected, 2) < 1e-9
    assert np.linalg.norm(u.data.conj().T @ u.data - np.eye(4), 2) < 1e-9


def test_polar_decompose_is_deterministic(rng):
    t = ComplexMatrix(np.outer(rng.standard_normal(3), rng.standard_normal(3)))
    first, _ = polar_decompose(t)
    second, _ = polar_decompose(t)
    assert first == second


def test_aluthge(shift, rng):
    normal = ComplexMatrix(np.diag([1., 1j]))
    assert aluthge(normal).allclose(normal)

    assert aluthge(shift).allclose(np.zeros((2, 2)), atol=1e-12)

    t = ginibre(rng, 5)
    assert operator_norm(aluthge(t)) <= operator_norm(t) * (1 + 1e-12)


def test_operator_norm(shift, rng):
    assert operator_norm(ComplexMatrix.identity(5)) == pytest.approx(1.)
    assert operator_norm(shift) == pytest.approx(1.)

    t = ginibre(rng, 3)
    x = rng.standard_normal((10000, 3)) + 1j*rng.standard_normal((10000, 3))
    x /= np.linalg.norm(x, axis=1, keepdims=True)
    oracle = np.max(np.linalg.norm(x @ t.data.T, axis=1))

    value = operator_norm(t)
    assert oracle <= value * (1 + 1e-12)
    assert value <= oracle * (1 + 1e-1)


def test_commutation_defect(rng):
    a = ginibre(rng, 4)
    assert commutation_defect(a, ComplexMatrix.identity(4)) < 1e-12

    b = matrix_polynomial(abs_op(a), [0.5, -1., 2.])
    assert commutation_defect(a, b) < 1e-12 * max(1., operator_norm(b))

    assert commutation_defect(a, ginibre(rng, 4)) > 1e-3

    with pytest.raises(DimensionMismatch):
        commutation_defect(a, ComplexMatrix.identity(3))


def test_abs_and_co_abs_share_singular_values(rng):
    for index in range(200):
        t = ginibre(rng, 2 + index % 7)
        left = abs_op(t).eigenvalues
        right = abs_op(adjoint(t)).eigenvalues

        np.testing.assert_allclose(np.sort(left), np.sort(right), rtol=0, atol=1e-9)
        assert abs(np.sum(left) - np.sum(right)) < 1e-9
