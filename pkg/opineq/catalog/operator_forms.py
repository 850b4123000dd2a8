"""
Classical bounds of the numerical radius in terms of norms.

"""

from .records import Leg
from .terms import norm_interval


__all__ = ['norm_sandwich', 'kittaneh_2003', 'kittaneh_2005_lower', 'kittaneh_2005_upper',
           'yamazaki', 'dragomir_printed', 'dragomir']


def norm_sandwich(operands, params):
    """
    ``||T|| / 2 <= w(T) <= ||T||``.

    """
    t = operands.t
    w = operands.radius(t)
    norm = norm_interval(t)

    return [Leg(norm * 0.5, w, label='lower'),
            Leg(w, norm, label='upper')]


def kittaneh_2003(operands, params):
    """
    ``w(T) <= (||T|| + ||T^2||^(1/2)) / 2``.

    """
    terms = operands.terms
    w = operands.radius(terms.t)
    rhs = (norm_interval(terms.t) + norm_interval(terms.square).sqrt()) * 0.5
    return [Leg(w, rhs)]


def kittaneh_2005_lower(operands, params):
    """
    ``||T*T + TT*|| / 4 <= w^2(T)``.

    """
    terms = operands.terms
    w = operands.radius(terms.t)
    return [Leg(norm_interval(terms.gram_sum) * 0.25, w ** 2)]


def kittaneh_2005_upper(operands, params):
    """
    ``w^2(T) <= ||T*T + TT*|| / 2``.

    """
    terms = operands.terms
    w = operands.radius(terms.t)
    return [Leg(w ** 2, norm_interval(terms.gram_sum) * 0.5)]


def yamazaki(operands, params):
    """
    ``w(T) <= (||T|| + w(T~)) / 2 <= (||T|| + ||T^2||^(1/2)) / 2`` with the
    Aluthge transform ``T~``.

    """
    terms = operands.terms
    w = operands.radius(terms.t)
    norm = norm_interval(terms.t)

    middle = (norm + operands.radius(terms.aluthge)) * 0.5
    outer = (norm + norm_interval(terms.square).sqrt()) * 0.5

    return [Leg(w, middle, label='aluthge'),
            Leg(middle, outer, label='square')]


def dragomir_printed(operands, params):
    """
    ``w^2(T) <= (||T|| + w(T^2)) / 2``.

    """
    terms = operands.terms
    w = operands.radius(terms.t)
    rhs = (norm_interval(terms.t) + operands.radius(terms.square)) * 0.5
    return [Leg(w ** 2, rhs)]


def dragomir(operands, params):
    """
    ``w^2(T) <= (||T||^2 + w(T^2)) / 2``.

    """
    terms = operands.terms
    w = operands.radius(terms.t)
    rhs = (norm_interval(terms.t) ** 2 + operands.radius(terms.square)) * 0.5
    return [Leg(w ** 2, rhs)]
