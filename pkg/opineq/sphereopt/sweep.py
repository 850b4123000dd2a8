import numpy as np

from ..radius.interval import Interval, Method
from .forms import FormPair, InfResult


__all__ = ['inf_power_diff', 'boundary_sweep']


_sweep_angles = 720
_golden_width = 1e-10
_refined_candidates = 3
_chord_points = 8
_zero_bisections = 80

_golden = (np.sqrt(5) - 1) / 2


def boundary_sweep(pair, angles):
    """
    Boundary of the joint range ``{(<a x, x>, <b x, x>)}`` in the given directions.

    For each angle the top eigenvector of ``cos(theta) a + sin(theta) b``
    maximises the corresponding linear functional over the joint range, so it
    lands on its boundary.

    Parameters
    ----------
    pair : FormPair
    angles : ndarray

    Returns
    -------
    ndarray
        Unit vectors, one row per angle.

    """
    angles = np.asarray(angles, dtype=np.float64)
    stack = (np.cos(angles)[:, None, None] * pair.a.data[None]
             + np.sin(angles)[:, None, None] * pair.b.data[None])
    _, vectors = np.linalg.eigh(stack)
    return vectors[:, :, -1]


def _path(x, y, weights):
    # normalised path from x to a phase-aligned y
    overlap = np.vdot(y, x)
    phase = overlap / abs(overlap) if abs(overlap) > 0 else 1.
    y = phase * y

    weights = np.asarray(weights, dtype=np.float64)[..., None]
    points = (1 - weights) * x + weights * y
    return points / np.linalg.norm(points, axis=-1, keepdims=True)


def _zero_crossing(pair, positive, negative):
    lo, hi = 0., 1.
    for _ in range(_zero_bisections):
        mid = 0.5 * (lo + hi)
        if pair.phi(_path(positive, negative, mid)) > 0:
            lo = mid
        else:
            hi = mid

    candidates = _path(positive, negative, np.array([lo, hi]))
    values = pair.value(candidates)
    best = int(np.argmin(values))
    return candidates[best], float(values[best])


def _golden_section(pair, left, right):
    def evaluate(theta):
        vector = boundary_sweep(pair, [theta])[0]
        return float(pair.value(vector)), vector

    c = right - _golden * (right - left)
    d = left + _golden * (right - left)
    fc, xc = evaluate(c)
    fd, xd = evaluate(d)

    while right - left > _golden_width:
        if fc < fd:
            right, d, fd, xd = d, c, fc, xc
            c = right - _golden * (right - left)
            fc, xc = evaluate(c)
        else:
            left, c, fc, xc = c, d, fd, xd
            d = left + _golden * (right - left)
            fd, xd = evaluate(d)

    return (fc, xc) if fc < fd else (fd, xd)


def inf_power_diff(pair):
    """
    Infimum over unit vectors of ``(<a x, x>^u - <b x, x>^v)^2``.

    The joint range of two Hermitian forms is convex. Its boundary is swept in
    720 directions; when the difference changes sign along the sweep the zero
    curve crosses the joint range and the infimum is zero, with a witness found
    by bisection between two boundary vectors of opposite sign. Otherwise the
    minimum is sought on the boundary and refined by golden-section search
    around the three best directions. The lower end of the returned interval
    is inflated by the largest variation between adjacent sweep samples.

    Parameters
    ----------
    pair : FormPair

    Returns
    -------
    InfResult

    """
    if not isinstance(pair, FormPair):
        pair = FormPair(*pair)

    if pair.n == 1:
        witness = np.ones(1, dtype=np.complex128)
        value = float(pair.value(witness))
        slack = 1e-12 * max(1., value)
        return InfResult(Interval(max(value - slack, 0.), value + slack, method=Method.EXACT_FORMULA),
                         witness, attained_zero=value == 0)

    angles = 2*np.pi * np.arange(_sweep_angles) / _sweep_angles
    vectors = boundary_sweep(pair, angles)
    phi = pair.phi(vectors)

    exact_zero = np.flatnonzero(phi == 0)
    if len(exact_zero):
        witness = vectors[exact_zero[0]]
        return InfResult(Interval(0., 0., method=Method.GRID_LIPSCHITZ), witness, attained_zero=True)

    if np.any(phi > 0) and np.any(phi < 0):
        positive = vectors[np.flatnonzero(phi > 0)[0]]
        negative = vectors[np.flatnonzero(phi < 0)[0]]
        witness, value = _zero_crossing(pair, positive, negative)
        return InfResult(Interval(0., value, method=Method.GRID_LIPSCHITZ), witness, attained_zero=True)

    values = phi**2
    variation = np.max(np.abs(np.diff(np.append(values, values[0]))))

    # chords between consecutive boundary vectors cover flat boundary segments
    weights = (np.arange(1, _chord_points + 1) / (_chord_points + 1))[:, None]
    chords = _path_stack(vectors, np.roll(vectors, -1, axis=0), weights)
    chord_values = pair.value(chords)

    best_value, best_vector = np.inf, None
    chord_best = np.unravel_index(np.argmin(chord_values), chord_values.shape)
    if chord_values[chord_best] < best_value:
        best_value, best_vector = float(chord_values[chord_best]), chords[chord_best]

    step = 2*np.pi / _sweep_angles
    for index in np.argsort(values, kind='stable')[:_refined_candidates]:
        if values[index] < best_value:
            best_value, best_vector = float(values[index]), vectors[index]

        refined_value, refined_vector = _golden_section(pair, angles[index] - step, angles[index] + step)
        if refined_value < best_value:
            best_value, best_vector = refined_value, refined_vector

    lower = max(best_value - variation, 0.)
    return InfResult(Interval(lower, best_value, method=Method.GRID_LIPSCHITZ), best_vector,
                     attained_zero=False)


def _path_stack(start, end, weights):
    overlap = np.einsum('ki,ki->k', end.conj(), start)
    magnitude = np.abs(overlap)
    phase = np.where(magnitude > 0, overlap / np.where(magnitude > 0, magnitude, 1), 1)
    end = phase[:, None] * end

    points = (1 - weights[:, :, None]) * start[None] + weights[:, :, None] * end[None]
    return points / np.linalg.norm(points, axis=-1, keepdims=True)
