import numpy as np

from .forms import FormPair


__all__ = ['sphere_brute_oracle']


def _random_unit(rng, samples, n):
    vectors = rng.standard_normal((samples, n)) + 1j*rng.standard_normal((samples, n))
    return vectors / np.linalg.norm(vectors, axis=1, keepdims=True)


def _gradient(pair, vectors):
    alpha, beta = pair.forms(vectors)
    phi = np.power(alpha, pair.u) - np.power(beta, pair.v)

    ax = vectors @ pair.a.data.T
    bx = vectors @ pair.b.data.T

    with np.errstate(divide='ignore', invalid='ignore'):
        da = np.where(alpha > 0, pair.u * np.power(alpha, pair.u - 1), 0.)
        db = np.where(beta > 0, pair.v * np.power(beta, pair.v - 1), 0.)

    grad = 2 * phi[:, None] * (da[:, None] * 2 * ax - db[:, None] * 2 * bx)

    # project onto the tangent space of the sphere
    radial = np.einsum('ki,ki->k', vectors.conj(), grad).real
    return grad - radial[:, None] * vectors


def sphere_brute_oracle(pair, samples, descent_steps, seed=0):
    """
    Reference value for the infimum of ``(<a x, x>^u - <b x, x>^v)^2``
    by random sampling followed by normalized gradient descent on the sphere,
    with step 1e-2 halved on every step that does not improve.

    Never used to decide a verdict, only to cross-check ``inf_power_diff``
    in tests.

    Parameters
    ----------
    pair : FormPair
    samples : int
        Number of random starting vectors.
    descent_steps : int
        Number of descent steps per start.
    seed : int, optional
        Seed of the random generator.

    Returns
    -------
    float
        Smallest value found; an upper bound of the infimum.

    """
    if not isinstance(pair, FormPair):
        pair = FormPair(*pair)

    rng = np.random.default_rng(seed)
    vectors = _random_unit(rng, samples, pair.n)
    values = pair.value(vectors)
    steps = np.full(samples, 1e-2)

    for _ in range(descent_steps):
        grad = _gradient(pair, vectors)
        lengths = np.linalg.norm(grad, axis=1, keepdims=True)
        direction = grad / np.where(lengths > 0, lengths, 1.)

        candidates = vectors - steps[:, None] * direction
        norms = np.linalg.norm(candidates, axis=1, keepdims=True)
        candidates = candidates / np.where(norms > 0, norms, 1.)

        candidate_values = pair.value(candidates)
        improved = candidate_values < values

        vectors = np.where(improved[:, None], candidates, vectors)
        values = np.where(improved, candidate_values, values)
        steps = np.where(improved, steps, 0.5 * steps)

    return float(np.min(values))
