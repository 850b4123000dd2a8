"""
Named hypothesis predicates of the registry rows. Every predicate takes the
operands of an instance and its parameters, and its docstring is the
statement reported when it fails.

"""

import numpy as np

from ..matcore import PSDMatrix, operator_norm, commutation_defect, COMMUTATION_GATE, SELFADJOINT_GATE
from ..errors import NotPSD, NotHermitian


__all__ = []


_integer_tol = 1e-12
_unit_tol = 1e-10


def params_only(predicate):
    predicate.params_only = True
    return predicate


@params_only
def alpha_beta_sum(operands, params):
    """alpha + beta >= 1"""
    return params.alpha + params.beta >= 1


@params_only
def gamma_delta_sum(operands, params):
    """gamma + delta >= 1"""
    return params.gamma + params.delta >= 1


@params_only
def alpha_unit(operands, params):
    """0 <= alpha <= 1"""
    return 0 <= params.alpha <= 1


@params_only
def m_at_least_one(operands, params):
    """m >= 1"""
    return params.m >= 1


@params_only
def m_integer(operands, params):
    """m is a positive integer"""
    return params.m >= 1 and abs(params.m - round(params.m)) <= _integer_tol


@params_only
def r_at_least_one(operands, params):
    """r >= 1"""
    return params.r >= 1


@params_only
def r_unit(operands, params):
    """0 <= r <= 1"""
    return 0 <= params.r <= 1


@params_only
def s_at_least_one(operands, params):
    """s >= 1"""
    return params.s >= 1


@params_only
def s_at_most_two(operands, params):
    """1 <= s <= 2, so that alpha = beta = 1/s still sum to at least 1"""
    return 1 <= params.s <= 2


def requires_s(operands, params):
    """a second operator S is supplied"""
    return operands.s is not None


def requires_pair(operands, params):
    """a partner operator B is supplied"""
    return operands.b is not None


def requires_x(operands, params):
    """a vector x is supplied"""
    return operands.x is not None


def requires_vectors(operands, params):
    """vectors x and y are supplied"""
    return operands.x is not None and operands.y is not None


def a_positive(operands, params):
    """A is positive"""
    try:
        PSDMatrix(operands.t)
    except (NotPSD, NotHermitian):
        return False

    return True


def ab_selfadjoint(operands, params):
    """AB is selfadjoint"""
    if operands.b is None:
        return False

    product = operands.t.data @ operands.b.data
    scale = max(1., operator_norm(operands.t) * operator_norm(operands.b))
    return operator_norm(product - product.conj().T) <= SELFADJOINT_GATE * scale


def abs_commutes(operands, params):
    """|A| B = B* |A|"""
    if operands.b is None:
        return False

    return commutation_defect(operands.t, operands.b) <= COMMUTATION_GATE


def positive_scalars(operands, params):
    """a > 0 and b > 0"""
    a, b = operands
    return bool(np.isfinite(a) and np.isfinite(b) and a > 0 and b > 0)


def x_unit(operands, params):
    """x is a unit vector"""
    return operands.x is not None and abs(np.linalg.norm(operands.x) - 1) <= _unit_tol
