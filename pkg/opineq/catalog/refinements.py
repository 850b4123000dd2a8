"""
Refined upper bounds of powers of ``w(T |T|^(alpha + beta - 1))``, each a
norm term minus a correction infimum over the unit sphere.

In the notation of the docstrings ``A_e = |T|^e``, ``B_e = |T*|^e``,
``K = T |T|^(alpha + beta - 1)`` and ``C(X, Y, u, v)`` is the infimum of
``(<X x, x>^u - <Y x, x>^v)^2`` over unit vectors.

"""

from .records import Leg
from .terms import norm_interval


__all__ = ['mixed_power_printed', 'mixed_power', 'sharpened_printed', 'sharpened',
           'sharpened_reciprocal_printed', 'sharpened_reciprocal',
           'young_refinement', 'sum_refinement', 'sum_refinement_merged']


def _radius_of_composite(operands, params):
    terms = operands.terms
    return operands.radius(terms.composite(params.alpha, params.beta))


def _power_norm(terms, left, right):
    return norm_interval(terms.power(left) + terms.star_power(right))


def mixed_power_printed(operands, params):
    """
    ``w^m(K) <= 2^(-m/r) ||A_(2 r alpha) + B_(2 r beta)||^(m/r) - 2^(-m) C(A_(2 alpha), B_(2 beta), m/2, m/2)``.

    """
    terms = operands.terms
    alpha, beta, m, r = params.alpha, params.beta, params.m, params.r

    lhs = _radius_of_composite(operands, params) ** m

    bound = _power_norm(terms, 2*r*alpha, 2*r*beta) ** (m / r) * 2**(-m / r)
    correction = operands.correction(terms.power(2*alpha), terms.star_power(2*beta), m / 2, m / 2)

    return [Leg(lhs, bound - correction * 2**(-m))]


def mixed_power(operands, params):
    """
    ``w^(2m)(K) <= 2^(-2m/r) ||A_(2 r alpha) + B_(2 r beta)||^(2m/r) - 2^(-2m) C(A_(2 alpha), B_(2 beta), m, m)``.

    """
    terms = operands.terms
    alpha, beta, m, r = params.alpha, params.beta, params.m, params.r

    lhs = _radius_of_composite(operands, params) ** (2*m)

    bound = _power_norm(terms, 2*r*alpha, 2*r*beta) ** (2*m / r) * 2**(-2*m / r)
    correction = operands.correction(terms.power(2*alpha), terms.star_power(2*beta), m, m)

    return [Leg(lhs, bound - correction * 2**(-2*m))]


def _sharpened_bound(operands, params):
    terms = operands.terms
    alpha, beta, r, s = params.alpha, params.beta, params.r, params.s

    lhs = _radius_of_composite(operands, params) ** (2*s)
    bound = _power_norm(terms, 2*r*s*alpha, 2*r*s*beta) ** (2 / r) * 2**(-2 / r)

    return lhs, bound


def sharpened_printed(operands, params):
    """
    ``w^(2s)(K) <= 2^(-2/r) ||A_(2 r s alpha) + B_(2 r s beta)||^(2/r) - inf <(A_(2 r s alpha) - B_(2 r s beta)) x, x> / 4``,
    with the unsquared bracket read with ``y = x``.

    """
    terms = operands.terms
    r, s = params.r, params.s

    lhs, bound = _sharpened_bound(operands, params)
    correction = operands.form_correction(terms.power(2*r*s*params.alpha), terms.star_power(2*r*s*params.beta))

    return [Leg(lhs, bound - correction * 0.25)]


def sharpened(operands, params):
    """
    ``w^(2s)(K) <= 2^(-2/r) ||A_(2 r s alpha) + B_(2 r s beta)||^(2/r) - C(A_(2 s alpha), B_(2 s beta), 1, 1) / 4``.

    """
    terms = operands.terms
    s = params.s

    lhs, bound = _sharpened_bound(operands, params)
    correction = operands.correction(terms.power(2*s*params.alpha), terms.star_power(2*s*params.beta))

    return [Leg(lhs, bound - correction * 0.25)]


def _reciprocal(params):
    return params.replace(alpha=1 / params.s, beta=1 / params.s, r=1.)


def sharpened_reciprocal_printed(operands, params):
    """
    Printed bound with ``alpha = beta = 1/s`` and ``r = 1``.

    """
    return sharpened_printed(operands, _reciprocal(params))


def sharpened_reciprocal(operands, params):
    """
    Corrected bound with ``alpha = beta = 1/s`` and ``r = 1``.

    """
    return sharpened(operands, _reciprocal(params))


def young_refinement(operands, params):
    """
    ``w^(2s)(K) <= ||A_(2 s p alpha) / p + B_(2 s q beta) / q|| - r0 C(A_(2 s alpha), B_(2 s beta), p/2, q/2)``.

    """
    terms = operands.terms
    alpha, beta, s, p, q = params.alpha, params.beta, params.s, params.p, params.q

    lhs = _radius_of_composite(operands, params) ** (2*s)

    bound = norm_interval(terms.power(2*s*p*alpha) * (1 / p) + terms.star_power(2*s*q*beta) * (1 / q))
    correction = operands.correction(terms.power(2*s*alpha), terms.star_power(2*s*beta), p / 2, q / 2)

    return [Leg(lhs, bound - correction * params.r0)]


def _sum_terms(operands, params):
    t_terms = operands.terms
    s_terms = operands.s_terms or t_terms

    composite = t_terms.composite(params.alpha, params.beta) + s_terms.composite(params.gamma, params.delta)
    lhs = operands.radius(composite)

    t_correction = operands.correction(t_terms.power(2*params.alpha), t_terms.star_power(2*params.beta), 0.5, 0.5)
    s_correction = operands.correction(s_terms.power(2*params.gamma), s_terms.star_power(2*params.delta), 0.5, 0.5)

    return t_terms, s_terms, lhs, (t_correction + s_correction) * 0.5


def sum_refinement(operands, params):
    """
    ``w(K_T + K_S) <= 2^(-1/r) ||A_(2 r alpha) + B_(2 r beta)||^(1/r) + 2^(-1/r) ||S_(2 r gamma) + S*_(2 r delta)||^(1/r)``
    minus half of both corrections ``C(A_(2 alpha), B_(2 beta), 1/2, 1/2)`` and
    ``C(S_(2 gamma), S*_(2 delta), 1/2, 1/2)``.

    """
    r = params.r
    t_terms, s_terms, lhs, correction = _sum_terms(operands, params)

    t_bound = _power_norm(t_terms, 2*r*params.alpha, 2*r*params.beta) ** (1 / r)
    s_bound = _power_norm(s_terms, 2*r*params.gamma, 2*r*params.delta) ** (1 / r)

    return [Leg(lhs, (t_bound + s_bound) * 2**(-1 / r) - correction)]


def sum_refinement_merged(operands, params):
    """
    ``w(K_T + K_S) <= ||A_(2 alpha) + B_(2 beta) + S_(2 gamma) + S*_(2 delta)|| / 2`` minus half of both corrections.

    """
    t_terms, s_terms, lhs, correction = _sum_terms(operands, params)

    total = (t_terms.power(2*params.alpha) + t_terms.star_power(2*params.beta)
             + s_terms.power(2*params.gamma) + s_terms.star_power(2*params.delta))

    return [Leg(lhs, norm_interval(total) * 0.5 - correction)]
