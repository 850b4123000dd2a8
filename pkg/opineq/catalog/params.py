import math

from ..errors import ParamsInvalid, ParseError


__all__ = ['ExponentParams']


_conjugacy_tol = 1e-12

_fields = ('alpha', 'beta', 'gamma', 'delta', 'm', 'r', 's', 'p', 'q')


class ExponentParams:
    """
    Scalar parameters of the inequalities: the exponents ``alpha``, ``beta``,
    ``gamma``, ``delta`` of the operator powers, the outer exponents ``m``, ``r``
    and ``s`` and the conjugate pair ``p``, ``q``.

    Only the basic domain is checked here (non-negative powers, positive outer
    exponents, conjugate ``p`` and ``q``). Constraints that only some
    inequalities need, such as ``alpha + beta >= 1``, are hypotheses of the
    corresponding registry rows.

    Parameters
    ----------
    alpha, beta, gamma, delta : float, optional
        Powers, default to 1/2.
    m, r, s : float, optional
        Outer exponents, default to 1.
    p : float, optional
        Young exponent, defaults to 2.
    q : float, optional
        Conjugate exponent; derived from ``p`` when not given, checked otherwise.

    """

    def __init__(self, alpha=0.5, beta=0.5, gamma=0.5, delta=0.5,
                 m=1., r=1., s=1., p=2., q=None):
        values = dict(alpha=alpha, beta=beta, gamma=gamma, delta=delta, m=m, r=r, s=s, p=p)

        for name, value in values.items():
            try:
                value = float(value)
            except (TypeError, ValueError):
                raise ParamsInvalid('Parameter %s must be a number, got %r' % (name, value))

            if not math.isfinite(value):
                raise ParamsInvalid('Parameter %s must be finite' % name)

            values[name] = value

        for name in ('alpha', 'beta', 'gamma', 'delta'):
            if values[name] < 0:
                raise ParamsInvalid('Parameter %s must be non-negative, got %g' % (name, values[name]))

        if values['m'] <= 0 or values['s'] <= 0:
            raise ParamsInvalid('Exponents m and s must be positive, got m=%g, s=%g' % (values['m'], values['s']))

        if values['r'] < 0:
            raise ParamsInvalid('Exponent r must be non-negative, got %g' % values['r'])

        if values['p'] <= 1:
            raise ParamsInvalid('Exponent p must exceed 1, got %g' % values['p'])

        conjugate = values['p'] / (values['p'] - 1)
        if q is None:
            q = conjugate
        else:
            q = float(q)
            if not q > 1 or abs(1 / values['p'] + 1 / q - 1) > _conjugacy_tol:
                raise ParamsInvalid('Exponents p=%g and q=%g are not conjugate' % (values['p'], q))

        self.alpha = values['alpha']
        self.beta = values['beta']
        self.gamma = values['gamma']
        self.delta = values['delta']
        self.m = values['m']
        self.r = values['r']
        self.s = values['s']
        self.p = values['p']
        self.q = q

    @property
    def r0(self):
        return min(1 / self.p, 1 / self.q)

    def replace(self, **kwargs):
        """
        Copy of the parameters with some of them replaced. Changing ``p``
        re-derives ``q``.

        """
        values = self.to_json()
        values.update(kwargs)
        if 'p' in kwargs and 'q' not in kwargs:
            values.pop('q')

        return ExponentParams(**values)

    def to_json(self):
        return {name: getattr(self, name) for name in _fields}

    @classmethod
    def from_json(cls, doc):
        if doc is None:
            return cls()

        if not isinstance(doc, dict):
            raise ParseError('Parameters must be given as an object')

        unknown = set(doc.keys()) - set(_fields)
        if unknown:
            raise ParseError('Unknown parameters %s' % ', '.join(sorted(unknown)))

        return cls(**doc)

    @classmethod
    def coerce(cls, params):
        if params is None:
            return cls()

        if isinstance(params, ExponentParams):
            return params

        return cls.from_json(params)

    def __eq__(self, other):
        if not isinstance(other, ExponentParams):
            return False

        return self.to_json() == other.to_json()

    def __repr__(self):
        return 'ExponentParams(%s)' % ', '.join('%s=%g' % (name, getattr(self, name)) for name in _fields)
