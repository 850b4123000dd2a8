import numpy as np

from ..errors import WidthNotReached, IoFailure
from ..matcore.matrix import as_matrix
from ..matcore.functions import operator_norm
from ..matcore.tolerances import EIGEN_SLACK, WIDTH_REL
from .interval import Interval, Method


__all__ = ['numerical_radius', 'support', 'RangeBoundary', 'range_boundary']


_initial_angles = 64
_max_rounds = 24
_max_angles = 2**22


def support(t, angles):
    """
    Evaluate the support function of the numerical range at a set of angles.

    For every angle ``theta`` the top eigenpair of
    ``H(theta) = (e^{i theta} T + e^{-i theta} T*) / 2`` is computed; its
    eigenvalue is ``max Re(e^{i theta} z)`` over the numerical range and its
    eigenvector ``x`` gives the boundary point ``<Tx, x>``.

    Parameters
    ----------
    t : ComplexMatrix
        Operator.
    angles : ndarray
        Angles in radians.

    Returns
    -------
    ndarray
        Support values, one per angle.
    ndarray
        Complex boundary points, one per angle.
    ndarray
        Unit eigenvectors, one row per angle.

    """
    t = as_matrix(t)
    data = t.data
    angles = np.asarray(angles, dtype=np.float64)

    phase = np.exp(1j * angles)[:, None, None]
    stack = 0.5 * (phase * data[None] + phase.conj() * data.conj().T[None])

    values, vectors = np.linalg.eigh(stack)
    top_values = values[:, -1]
    top_vectors = vectors[:, :, -1]

    points = np.einsum('ki,ij,kj->k', top_vectors.conj(), data, top_vectors)

    return top_values, points, top_vectors


def _arc_bounds(a, b, fa, fb, norm):
    # upper bound of the support function on every arc [a, b]
    delta = b - a
    lipschitz = 0.5 * (fa + fb + norm * delta)

    # supporting lines Re(e^{i theta} z) = f(theta) at both ends meet at a vertex v
    det = np.sin(a - b)
    vx = (np.sin(a) * fb - np.sin(b) * fa) / det
    vy = (np.cos(a) * fb - np.cos(b) * fa) / det
    modulus = np.hypot(vx, vy)

    peak = np.mod(-np.arctan2(vy, vx) - a, 2*np.pi)
    polygon = np.where(peak <= delta, modulus, np.maximum(fa, fb))
    polygon += 8 * np.finfo(float).eps * (np.abs(fa) + np.abs(fb) + norm) / np.abs(det)

    return np.minimum(lipschitz, polygon)


def numerical_radius(t, width_target=None, **kwargs):
    """
    Certified enclosure of the numerical radius ``w(T)``.

    The lower end is the largest support value (or boundary-point modulus)
    found over the evaluated angles. The upper end bounds the support function
    on every arc between consecutive angles, by the smaller of the Lipschitz
    tent bound (the support function has Lipschitz constant ``||T||``) and the
    vertex of the two supporting lines at the ends of the arc. Arcs whose bound
    exceeds the target are bisected until the enclosure is narrow enough.

    Parameters
    ----------
    t : ComplexMatrix
        Operator.
    width_target : float, optional
        Required width ``hi - lo``, defaults to ``1e-8 * max(1, ||T||)``.
    max_rounds : int, optional
        Maximum number of refinement rounds, defaults to 24.
    initial_angles : int, optional
        Size of the initial uniform grid, defaults to 64.

    Returns
    -------
    Interval
        Enclosure of ``w(T)``; ``witnesses`` holds the angles attaining the lower end.

    Raises
    ------
    WidthNotReached
        When the refinement cap is hit; the enclosure reached is attached.

    """
    t = as_matrix(t)
    max_rounds = kwargs.pop('max_rounds', _max_rounds)
    initial_angles = kwargs.pop('initial_angles', _initial_angles)

    norm = operator_norm(t)
    if norm == 0:
        return Interval(0., 0., method=Method.EXACT_FORMULA)

    if width_target is None:
        width_target = WIDTH_REL * max(1., norm)

    if width_target <= 0:
        raise ValueError('Width target must be positive, got %g' % width_target)

    slack = EIGEN_SLACK * t.n * norm

    angles = 2*np.pi * np.arange(initial_angles) / initial_angles
    values, points, _ = support(t, angles)

    evaluated_angles = [angles]
    evaluated_values = [values]
    lo = max(np.max(values), np.max(np.abs(points)))

    a = angles
    b = np.append(angles[1:], 2*np.pi)
    fa = values + slack
    fb = np.append(values[1:], values[0]) + slack

    settled = -np.inf
    num_evaluated = initial_angles

    for round_index in range(max_rounds + 1):
        bounds = _arc_bounds(a, b, fa, fb, norm)

        hi = max(lo, settled, np.max(bounds) if len(bounds) else -np.inf)
        if hi - (lo - slack) <= width_target:
            break

        if round_index == max_rounds or num_evaluated >= _max_angles:
            interval = Interval(max(lo - slack, 0.), hi, method=Method.GRID_LIPSCHITZ)
            raise WidthNotReached('Numerical radius enclosure [%e, %e] did not reach width %e'
                                  % (interval.lo, interval.hi, width_target), interval=interval)

        open_arcs = bounds > lo - slack + width_target
        if np.any(~open_arcs):
            settled = max(settled, np.max(bounds[~open_arcs]))

        a, b, fa, fb = a[open_arcs], b[open_arcs], fa[open_arcs], fb[open_arcs]

        mids = 0.5 * (a + b)
        mid_values, mid_points, _ = support(t, mids)
        num_evaluated += len(mids)

        evaluated_angles.append(mids)
        evaluated_values.append(mid_values)
        lo = max(lo, np.max(mid_values), np.max(np.abs(mid_points)))

        fm = mid_values + slack
        a, b = np.concatenate([a, mids]), np.concatenate([mids, b])
        fa, fb = np.concatenate([fa, fm]), np.concatenate([fm, fb])

    lower = max(lo - slack, 0.)

    all_angles = np.concatenate(evaluated_angles)
    all_values = np.concatenate(evaluated_values)
    ties = np.sort(all_angles[all_values >= lo - width_target])

    return Interval(lower, max(hi, lower), method=Method.GRID_LIPSCHITZ, witnesses=tuple(ties.tolist()))


class RangeBoundary:
    """
    Sampled boundary of the numerical range.

    Parameters
    ----------
    points : ndarray
        Array of shape ``(count, 2)`` with the real and imaginary parts of the
        boundary points.
    angles : ndarray
        Matching angles in ``[0, 2 pi)``.

    """

    def __init__(self, points, angles):
        self.points = np.asarray(points, dtype=np.float64)
        self.angles = np.asarray(angles, dtype=np.float64)

    def __len__(self):
        return len(self.angles)

    @property
    def complex_points(self):
        return self.points[:, 0] + 1j*self.points[:, 1]

    def to_csv(self, path):
        """
        Write the boundary as CSV with header ``theta,re,im`` and 17 significant digits.

        Parameters
        ----------
        path : str
            Output file.

        Returns
        -------

        """
        table = np.column_stack([self.angles, self.points])
        try:
            np.savetxt(path, table, delimiter=',', header='theta,re,im', comments='', fmt='%.17g')
        except OSError as exc:
            raise IoFailure('Could not write boundary to %s: %s' % (path, exc))

    @classmethod
    def from_csv(cls, path):
        table = np.loadtxt(path, delimiter=',', skiprows=1, ndmin=2)
        return cls(table[:, 1:3], table[:, 0])


def range_boundary(t, count):
    """
    Sample the boundary of the numerical range at ``count`` equispaced angles.

    Parameters
    ----------
    t : ComplexMatrix
        Operator.
    count : int
        Number of angles, at least 3.

    Returns
    -------
    RangeBoundary

    """
    if count < 3:
        raise ValueError('At least 3 boundary points are needed, got %d' % count)

    angles = 2*np.pi * np.arange(count) / count
    _, points, _ = support(t, angles)

    return RangeBoundary(np.column_stack([points.real, points.imag]), angles)
