"""
Pointwise inequalities between quadratic forms, evaluated on given vectors.

"""

from ..matcore import PSDMatrix
from .records import Leg
from .terms import form_value, form_modulus, norm_interval


__all__ = ['schwarz', 'reid_printed', 'reid_halmos', 'kato', 'kittaneh_fg',
           'furuta_printed', 'furuta', 'jensen_convex', 'jensen_concave']


def schwarz(operands, params):
    """
    ``|<A x, y>|^2 <= <A x, x> <A y, y>`` for the positive ``A = |T|``.

    """
    a = operands.terms.abs
    x, y = operands.x, operands.y

    lhs = form_modulus(a, x, y) ** 2
    rhs = form_value(a, x) * form_value(a, y)
    return [Leg(lhs, rhs)]


def reid_printed(operands, params):
    """
    ``|<A B x, y>| <= ||B|| <A x, x>`` with a free ``y``.

    """
    a, b = operands.t, operands.b
    lhs = form_modulus(a @ b, operands.x, operands.y)
    rhs = norm_interval(b) * form_value(a, operands.x)
    return [Leg(lhs, rhs)]


def reid_halmos(operands, params):
    """
    ``|<A B x, x>| <= r(B) <A x, x>``.

    """
    a, b = PSDMatrix(operands.t), operands.b
    radius = operands.spectral(b, hint=a, coeffs=operands.coeffs)

    lhs = form_modulus(a @ b, operands.x)
    rhs = radius * form_value(a, operands.x)
    return [Leg(lhs, rhs)]


def kato(operands, params):
    """
    ``|<T x, y>|^2 <= <|T|^(2 alpha) x, x> <|T*|^(2 (1 - alpha)) y, y>``.

    """
    terms = operands.terms
    x, y = operands.x, operands.y
    alpha = params.alpha

    lhs = form_modulus(terms.t, x, y) ** 2
    rhs = form_value(terms.power(2*alpha), x) * form_value(terms.star_power(2*(1 - alpha)), y)
    return [Leg(lhs, rhs)]


def kittaneh_fg(operands, params):
    """
    ``|<A B x, y>| <= r(B) ||f(|A|) x|| ||g(|A*|) y||`` for the power family
    ``f(t) = t^alpha``, ``g(t) = t^(1 - alpha)``.

    """
    terms = operands.terms
    x, y = operands.x, operands.y
    alpha = params.alpha
    b = operands.b

    radius = operands.spectral(b, hint=terms.abs, coeffs=operands.coeffs)

    lhs = form_modulus(terms.t @ b, x, y)
    left = form_value(terms.power(2*alpha), x).clip_lower(0.).sqrt()
    right = form_value(terms.star_power(2*(1 - alpha)), y).clip_lower(0.).sqrt()
    return [Leg(lhs, radius * left * right)]


def _furuta(operands, params, y_terms):
    terms = operands.terms
    x, y = operands.x, operands.y
    alpha, beta = params.alpha, params.beta

    lhs = form_modulus(terms.composite(alpha, beta), x, y) ** 2
    rhs = form_value(terms.power(2*alpha), x) * form_value(y_terms(2*beta), y)
    return [Leg(lhs, rhs)]


def furuta_printed(operands, params):
    """
    ``|<T |T|^(alpha + beta - 1) x, y>|^2 <= <|T|^(2 alpha) x, x> <|T|^(2 beta) y, y>``.

    """
    return _furuta(operands, params, operands.terms.power)


def furuta(operands, params):
    """
    ``|<T |T|^(alpha + beta - 1) x, y>|^2 <= <|T|^(2 alpha) x, x> <|T*|^(2 beta) y, y>``.

    """
    return _furuta(operands, params, operands.terms.star_power)


def jensen_convex(operands, params):
    """
    ``<S x, x>^r <= <S^r x, x>`` for ``S = |T|``, unit ``x`` and ``r >= 1``.

    """
    terms = operands.terms
    x = operands.x

    lhs = form_value(terms.abs, x).clip_lower(0.) ** params.r
    rhs = form_value(terms.power(params.r), x)
    return [Leg(lhs, rhs)]


def jensen_concave(operands, params):
    """
    ``<S^r x, x> <= <S x, x>^r`` for ``S = |T|``, unit ``x`` and ``0 <= r <= 1``.

    """
    terms = operands.terms
    x = operands.x

    lhs = form_value(terms.power(params.r), x)
    rhs = form_value(terms.abs, x).clip_lower(0.) ** params.r
    return [Leg(lhs, rhs)]
