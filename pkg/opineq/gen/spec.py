from enum import Enum

import numpy as np

from ..errors import ParseError, DimensionOutOfRange
from ..utils import constant_case


__all__ = ['Family', 'GeneratorSpec', 'OperatorPair', 'random_stream', 'MAX_DIM']


MAX_DIM = 256


class Family(Enum):
    """
    Matrix ensembles known to the generators.

    """

    GINIBRE = 'GINIBRE'
    GUE = 'GUE'
    HAAR_UNITARY = 'HAAR_UNITARY'
    NORMAL = 'NORMAL'
    NILPOTENT_SHIFT = 'NILPOTENT_SHIFT'
    RANK_ONE = 'RANK_ONE'
    REID_PAIR = 'REID_PAIR'
    FG_PAIR = 'FG_PAIR'
    PARAM_2X2 = 'PARAM_2X2'

    @property
    def code(self):
        return list(Family).index(self)

    @property
    def is_pair(self):
        return self in (Family.REID_PAIR, Family.FG_PAIR)

    @classmethod
    def parse(cls, value):
        if isinstance(value, Family):
            return value

        try:
            return cls(constant_case(value))
        except ValueError:
            raise ParseError('Unknown generator family %r' % value)


def random_stream(*key):
    """
    Counter-based generator keyed by a tuple of non-negative integers, so that
    every draw is a pure function of its key.

    Parameters
    ----------
    key : int
        Components of the key, typically seed, family, dimension and draw index.

    Returns
    -------
    numpy.random.Generator

    """
    return np.random.Generator(np.random.Philox(np.random.SeedSequence([int(k) for k in key])))


class OperatorPair:
    """
    Pair ``(A, B)`` built to satisfy the hypotheses of the pair inequalities,
    with the ascending coefficients of the polynomial relating them.

    """

    def __init__(self, a, b, coeffs):
        self.a = a
        self.b = b
        self.coeffs = [float(c) for c in coeffs]

    def __iter__(self):
        return iter((self.a, self.b))


class GeneratorSpec:
    """
    Full description of one generator draw.

    Parameters
    ----------
    family : Family or str
        Ensemble to draw from.
    dim : int
        Dimension, between 1 and 256.
    seed : int, optional
        Non-negative seed, defaults to 0.
    extra : dict, optional
        Family-specific parameters.
    index : int, optional
        Draw index within the stream of ``(seed, family, dim)``, defaults to 0.

    """

    def __init__(self, family, dim, seed=0, extra=None, index=0):
        self.family = Family.parse(family)

        if isinstance(dim, bool) or int(dim) != dim or not 1 <= dim <= MAX_DIM:
            raise DimensionOutOfRange('Dimension must be an integer in [1, %d], got %r' % (MAX_DIM, dim))

        if int(seed) < 0 or int(index) < 0:
            raise ParseError('Seed and draw index must be non-negative')

        self.dim = int(dim)
        self.seed = int(seed)
        self.extra = dict(extra or {})
        self.index = int(index)

    def stream(self, tag=0):
        return random_stream(self.seed, self.family.code, self.dim, self.index, tag)

    def replace(self, **kwargs):
        doc = self.to_json()
        doc.update(kwargs)
        return GeneratorSpec.from_json(doc)

    def to_json(self):
        return {
            'family': self.family.value,
            'dim': self.dim,
            'seed': self.seed,
            'extra': dict(self.extra),
            'index': self.index,
        }

    @classmethod
    def from_json(cls, doc):
        if not isinstance(doc, dict):
            raise ParseError('Generator spec must be a JSON object')

        unknown = set(doc.keys()) - {'family', 'dim', 'seed', 'extra', 'index'}
        if unknown:
            raise ParseError('Unknown generator spec keys %s' % ', '.join(sorted(unknown)))

        try:
            return cls(doc['family'], doc['dim'], seed=doc.get('seed', 0),
                       extra=doc.get('extra', None), index=doc.get('index', 0))
        except KeyError as exc:
            raise ParseError('Generator spec is missing key %s' % exc)
        except (TypeError, ValueError) as exc:
            if isinstance(exc, (ParseError, DimensionOutOfRange)):
                raise
            raise ParseError('Invalid generator spec: %s' % exc)

    def __eq__(self, other):
        return isinstance(other, GeneratorSpec) and self.to_json() == other.to_json()

    def __repr__(self):
        return 'GeneratorSpec(%s, dim=%d, seed=%d, index=%d)' % (self.family.value, self.dim, self.seed, self.index)
