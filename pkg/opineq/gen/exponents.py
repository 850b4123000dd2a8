import zlib

from ..catalog import ExponentParams, IneqRecord, lookup
from .spec import random_stream


__all__ = ['sample_params']


# stream tag of parameter draws, distinct from every family code and the vector tag
_params_tag = 2000

_max_attempts = 1000


def _record_key(record):
    if record is None:
        return 0

    return zlib.crc32(('%s/%s' % (record.id, record.variant.value)).encode())


def _draw_pair(rng):
    while True:
        first, second = rng.uniform(0., 2., size=2)
        if first + second >= 1:
            return first, second


def _draw(rng, hypotheses):
    alpha, beta = _draw_pair(rng)
    gamma, delta = _draw_pair(rng)

    values = dict(alpha=alpha, beta=beta, gamma=gamma, delta=delta,
                  m=rng.uniform(1., 3.), r=rng.uniform(1., 3.), s=rng.uniform(1., 3.),
                  p=rng.uniform(1.1, 4.))

    if 'm_integer' in hypotheses:
        values['m'] = float(rng.integers(1, 5))

    if 'r_unit' in hypotheses:
        values['r'] = rng.uniform(0., 1.)

    if 'alpha_unit' in hypotheses:
        values['alpha'] = rng.uniform(0., 1.)

    if 's_at_most_two' in hypotheses:
        values['s'] = rng.uniform(1., 2.)

    return ExponentParams(**values)


def sample_params(seed, constraints=None, index=0, variant=None):
    """
    Draw exponents uniformly from the admissible boxes of an inequality.

    The boxes are ``alpha, beta`` (and ``gamma, delta``) in ``[0, 2]`` with a sum
    of at least 1, ``m, r, s`` in ``[1, 3]`` and ``p`` in ``[1.1, 4]`` with its
    conjugate ``q``. Rows that need integer ``m``, ``r`` in ``[0, 1]``, ``alpha``
    in ``[0, 1]`` or ``s`` in ``[1, 2]`` draw from those ranges instead. Draws are
    repeated until every parameter hypothesis of the row holds.

    Parameters
    ----------
    seed : int
    constraints : str or IneqRecord, optional
        Registry id, or row, whose hypotheses the parameters must satisfy.
    index : int, optional
        Draw index within the stream of ``(seed, constraints)``.
    variant : Variant or str, optional
        Variant of the row when ``constraints`` is an id.

    Returns
    -------
    ExponentParams

    """
    record = constraints
    if constraints is not None and not isinstance(constraints, IneqRecord):
        record = lookup(constraints, variant)

    hypotheses = record.hypotheses if record is not None else ()
    rng = random_stream(seed, _params_tag, _record_key(record), index)

    params = None
    for _ in range(_max_attempts):
        params = _draw(rng, hypotheses)
        if record is None or record.params_ok(params):
            return params

    return params
