"""
Scalar refinements of the Young inequality.

"""


__all__ = ['young', 'young_power']


def young(a, b, params):
    """
    ``a b + r0 (a^(p/2) - b^(q/2))^2 <= a^p / p + b^q / q``.

    Returns
    -------
    float
        Left-hand side.
    float
        Right-hand side.

    """
    p, q = params.p, params.q
    lhs = a*b + params.r0 * (a**(p / 2) - b**(q / 2))**2
    rhs = a**p / p + b**q / q
    return lhs, rhs


def young_power(a, b, params):
    """
    ``(a^(1/p) b^(1/q))^m + r0^m (a^(m/2) - b^(m/2))^2 <= (a^r / p + b^r / q)^(m/r)``.

    """
    p, q, m, r = params.p, params.q, params.m, params.r
    lhs = (a**(1 / p) * b**(1 / q))**m + params.r0**m * (a**(m / 2) - b**(m / 2))**2
    rhs = (a**r / p + b**r / q)**(m / r)
    return lhs, rhs
