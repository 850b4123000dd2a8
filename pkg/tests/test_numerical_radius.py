import numpy as np
import pytest

from opineq.errors import WidthNotReached
from opineq.matcore import ComplexMatrix, operator_norm
from opineq.radius import numerical_radius, range_boundary, RangeBoundary, Method
from opineq.gen import haar_unitary, random_stream

from conftest import ginibre


def test_identity():
    w = numerical_radius(ComplexMatrix.identity(3), width_target=1e-9)
    assert w.contains(1.)
    assert w.width <= 1e-9


def test_shift(shift):
    w = numerical_radius(shift)
    assert w.contains(0.5)
    assert w.width <= 1e-8
    assert w.method is Method.GRID_LIPSCHITZ


def test_normal():
    assert numerical_radius(np.diag([1., 1j])).contains(1.)


def test_zero():
    w = numerical_radius(np.zeros((3, 3)))
    assert w.lo == w.hi == 0


def test_width_target_must_be_positive(shift):
    with pytest.raises(ValueError):
        numerical_radius(shift, width_target=0.)


def test_width_not_reached(rng):
    t = ginibre(rng, 3)
    with pytest.raises(WidthNotReached) as exc:
        numerical_radius(t, width_target=1e-14, max_rounds=0)

    interval = exc.value.interval
    assert interval is not None
    assert interval.lo <= interval.hi


def test_sampling_oracle(rng):
    t = ginibre(rng, 3)
    w = numerical_radius(t)

    x = rng.standard_normal((20000, 3)) + 1j*rng.standard_normal((20000, 3))
    x /= np.linalg.norm(x, axis=1, keepdims=True)
    sampled = np.max(np.abs(np.einsum('ki,ij,kj->k', x.conj(), t.data, x)))

    assert sampled <= w.hi + 1e-12
    assert w.width <= 1e-8 * max(1., operator_norm(t))


def test_homogeneity(rng):
    t = ginibre(rng, 4)
    c = 1.7 - 0.4j

    w = numerical_radius(t)
    scaled = numerical_radius(c * t)

    tol = 1e-8 * max(1., abs(c) * w.hi)
    assert scaled.overlaps(w * abs(c), tol=tol)


def test_unitary_invariance(rng):
    t = ginibre(rng, 4)
    u = haar_unitary(random_stream(7), 4)
    rotated = ComplexMatrix(u @ t.data @ u.conj().T)

    assert numerical_radius(rotated).overlaps(numerical_radius(t), tol=1e-8)


def test_boundary_of_identity():
    boundary = range_boundary(ComplexMatrix.identity(2), 4)

    assert len(boundary) == 4
    np.testing.assert_allclose(boundary.points, [[1., 0.]] * 4, atol=1e-12)


def test_boundary_of_shift_is_a_circle(shift):
    boundary = range_boundary(shift, 360)
    np.testing.assert_allclose(np.abs(boundary.complex_points), 0.5, atol=1e-8)


def test_boundary_of_hermitian_is_real():
    boundary = range_boundary(np.diag([0., 1.]), 36)

    assert np.all(np.abs(boundary.points[:, 1]) <= 1e-10)
    assert np.all(boundary.points[:, 0] >= -1e-10)
    assert np.all(boundary.points[:, 0] <= 1 + 1e-10)


def test_boundary_needs_three_points(shift):
    with pytest.raises(ValueError):
        range_boundary(shift, 2)


def test_boundary_csv(shift, tmp_path):
    path = str(tmp_path / 'range.csv')
    boundary = range_boundary(shift, 12)
    boundary.to_csv(path)

    with open(path) as file:
        assert file.readline().strip() == 'theta,re,im'

    loaded = RangeBoundary.from_csv(path)
    np.testing.assert_array_equal(loaded.points, boundary.points)
    np.testing.assert_array_equal(loaded.angles, boundary.angles)


def _width_check(rng, dims, repeats):
    for n in dims:
        for _ in range(repeats):
            t = ginibre(rng, n)
            w = numerical_radius(t, width_target=1e-6 * max(1., operator_norm(t)))
            assert w.width <= 1e-6 * max(1., operator_norm(t))


def test_width_on_larger_matrices(rng):
    _width_check(rng, [8, 16], 2)


@pytest.mark.slow
def test_width_quality(rng):
    _width_check(rng, range(1, 17), 7)
