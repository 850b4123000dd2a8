import numpy as np
from cached_property import cached_property

from ..errors import NoConvergence
from ..matcore import (ComplexMatrix, adjoint, abs_op, frac_power, operator_norm, aluthge,
                       spectral_radius, as_matrix, as_vector, vector_to_json, NORM_REL, WIDTH_REL)
from ..radius import Interval, numerical_radius
from ..sphereopt import FormPair, inf_sq_form_diff, inf_form_diff, inf_power_diff
from ..utils import default_logger as logger


__all__ = ['OperatorTerms', 'Operands', 'norm_interval', 'form_value', 'form_modulus']


def norm_interval(m):
    """
    Enclosure of the operator norm of ``m``.

    """
    return Interval.around(operator_norm(m), NORM_REL).clip_lower(0.)


def form_value(m, x):
    """
    Enclosure of the real quadratic form ``<m x, x>`` of a Hermitian ``m``.

    """
    m = as_matrix(m)
    value = np.vdot(x, m.data @ x).real
    delta = NORM_REL * max(1., operator_norm(m) * np.vdot(x, x).real)
    return Interval(value - delta, value + delta)


def form_modulus(m, x, y=None):
    """
    Enclosure of ``|<m x, y>|``, with ``y`` defaulting to ``x``.

    """
    m = as_matrix(m)
    y = x if y is None else y
    modulus = abs(np.vdot(y, m.data @ x))
    delta = NORM_REL * max(1., operator_norm(m) * np.linalg.norm(x) * np.linalg.norm(y))
    return Interval(max(modulus - delta, 0.), modulus + delta)


class OperatorTerms:
    """
    Memoised matrix functions of one operator ``T``: its absolute values ``|T|``
    and ``|T*|``, their powers and the composites ``T |T|^(e)``.

    Parameters
    ----------
    t : ComplexMatrix

    """

    def __init__(self, t):
        self.t = as_matrix(t)
        self._powers = {}
        self._star_powers = {}

    @cached_property
    def abs(self):
        return abs_op(self.t)

    @cached_property
    def abs_star(self):
        return abs_op(adjoint(self.t))

    @cached_property
    def gram_sum(self):
        data = self.t.data
        return ComplexMatrix(data.conj().T @ data + data @ data.conj().T)

    @cached_property
    def square(self):
        return self.t @ self.t

    @cached_property
    def aluthge(self):
        return aluthge(self.t)

    def power(self, e):
        """
        ``|T|^e``.

        """
        e = float(e)
        if e not in self._powers:
            self._powers[e] = frac_power(self.abs, e)

        return self._powers[e]

    def star_power(self, e):
        """
        ``|T*|^e``.

        """
        e = float(e)
        if e not in self._star_powers:
            self._star_powers[e] = frac_power(self.abs_star, e)

        return self._star_powers[e]

    def composite(self, alpha, beta):
        """
        ``T |T|^(alpha + beta - 1)``, formed explicitly.

        """
        return self.t @ self.power(alpha + beta - 1)


class Operands:
    """
    Operands of one inequality instance, together with the evaluation
    settings shared by all of its terms.

    Parameters
    ----------
    t : ComplexMatrix, optional
        Operator ``T``, or ``A`` for the pair forms.
    s : ComplexMatrix, optional
        Second operator ``S``.
    b : ComplexMatrix, optional
        Partner ``B`` of a pair ``(A, B)``.
    x, y : ndarray, optional
        Vectors of the pointwise forms.
    coeffs : sequence of float, optional
        Polynomial with ``B = q(A)`` or ``B = q(|A|)`` recorded by the generator.
    width_rel : float, optional
        Relative width target of numerical radius enclosures.
    context : str, optional
        Log context.

    """

    def __init__(self, t=None, s=None, b=None, x=None, y=None, coeffs=None, **kwargs):
        self.t = as_matrix(t) if t is not None else None
        self.s = as_matrix(s) if s is not None else None
        self.b = as_matrix(b) if b is not None else None

        n = self.t.n if self.t is not None else None
        if self.s is not None and self.t is not None:
            self.t.check_same_dim(self.s)
        if self.b is not None and self.t is not None:
            self.t.check_same_dim(self.b)

        self.x = as_vector(x, n) if x is not None else None
        self.y = as_vector(y, n) if y is not None else None
        self.coeffs = None if coeffs is None else [float(c) for c in coeffs]

        self.width_rel = kwargs.pop('width_rel', WIDTH_REL)
        self.context = kwargs.pop('context', None)

        self.terms = OperatorTerms(self.t) if self.t is not None else None
        self.s_terms = OperatorTerms(self.s) if self.s is not None else None

    def radius(self, m):
        """
        Enclosure of the numerical radius of ``m``; when the width target is
        not reached the enclosure attached to the error is used.

        """
        m = as_matrix(m)
        width = self.width_rel * max(1., operator_norm(m))
        try:
            return numerical_radius(m, width_target=width)
        except NoConvergence as exc:
            logger.warning('Using wider numerical radius enclosure: %s' % exc, context=self.context)
            return exc.interval

    def spectral(self, b, hint=None, coeffs=None):
        """
        Enclosure of the spectral radius of ``b``; a repeated-squaring enclosure
        wider than its target is used as it is.

        """
        try:
            return spectral_radius(b, hint=hint, coeffs=coeffs)
        except NoConvergence as exc:
            logger.warning('Using wider spectral radius enclosure: %s' % exc, context=self.context)
            return exc.interval

    def correction(self, a, b, u=1., v=1.):
        """
        Enclosure of ``inf (<a x, x>^u - <b x, x>^v)^2`` over unit vectors.

        """
        if u == 1 and v == 1:
            result = inf_sq_form_diff(a, b)
        else:
            result = inf_power_diff(FormPair(a, b, u, v))

        logger.debug('Correction infimum %r' % result.value, context=self.context)
        return result.value

    def form_correction(self, a, b):
        """
        Enclosure of ``inf <(a - b) x, x>`` over unit vectors.

        """
        return inf_form_diff(a, b).value

    def to_json(self):
        """
        Replayable document: the matrix format of ``T`` with companion entries.

        """
        doc = self.t.to_json() if self.t is not None else {}
        if self.s is not None:
            doc['s'] = self.s.to_json()
        if self.b is not None:
            doc['b'] = self.b.to_json()
        if self.coeffs is not None:
            doc['coeffs'] = list(self.coeffs)
        if self.x is not None:
            doc['x'] = vector_to_json(self.x)
        if self.y is not None:
            doc['y'] = vector_to_json(self.y)

        return doc
