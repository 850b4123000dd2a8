import math
from enum import Enum


__all__ = ['Interval', 'Method']


class Method(Enum):
    """
    How an enclosure was obtained, from the strongest guarantee to the weakest.

    """

    EXACT_FORMULA = 'exact_formula'
    GRID_LIPSCHITZ = 'grid_lipschitz'
    GELFAND = 'gelfand'
    SAMPLING_LOWER = 'sampling_lower'

    @classmethod
    def weakest(cls, *methods):
        order = list(cls)
        return max(methods, key=order.index)


class Interval:
    """
    Certified real enclosure ``[lo, hi]`` of a quantity, tagged with the
    method that produced it.

    Arithmetic between intervals maps monotone functions through their
    endpoints and cross-combines endpoints for differences, so that the
    result still encloses the exact value. A combined interval carries the
    weakest method of its operands.

    Parameters
    ----------
    lo : float
        Lower end.
    hi : float
        Upper end.
    method : Method, optional
        Method used, defaults to ``EXACT_FORMULA``.
    witnesses : tuple, optional
        Data attaining the enclosed value, if any.

    """

    def __init__(self, lo, hi, method=Method.EXACT_FORMULA, witnesses=()):
        lo = float(lo)
        hi = float(hi)

        if not (math.isfinite(lo) and math.isfinite(hi)):
            raise ValueError('Interval ends must be finite, got [%g, %g]' % (lo, hi))

        if lo > hi:
            raise ValueError('Interval lower end %.17g exceeds upper end %.17g' % (lo, hi))

        self.lo = lo
        self.hi = hi
        self.method = Method(method)
        self.witnesses = tuple(witnesses)

    @classmethod
    def exact(cls, value, method=Method.EXACT_FORMULA):
        return cls(value, value, method=method)

    @classmethod
    def around(cls, value, rel, method=Method.EXACT_FORMULA):
        """
        Enclosure ``value +- rel * max(1, |value|)``.

        Parameters
        ----------
        value : float
        rel : float
        method : Method, optional

        Returns
        -------
        Interval

        """
        delta = rel * max(1., abs(value))
        return cls(value - delta, value + delta, method=method)

    @property
    def width(self):
        return self.hi - self.lo

    @property
    def mid(self):
        return 0.5 * (self.lo + self.hi)

    def contains(self, value, tol=0.):
        return self.lo - tol <= value <= self.hi + tol

    def overlaps(self, other, tol=0.):
        other = _as_interval(other)
        return self.lo - tol <= other.hi and other.lo - tol <= self.hi

    def clip_lower(self, bound=0.):
        """
        Intersect with ``[bound, inf)``, for quantities known to be at least ``bound``.

        """
        return Interval(max(self.lo, bound), max(self.hi, bound), method=self.method, witnesses=self.witnesses)

    def __add__(self, other):
        other = _as_interval(other)
        return Interval(self.lo + other.lo, self.hi + other.hi,
                        method=Method.weakest(self.method, other.method))

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_interval(other)
        return Interval(self.lo - other.hi, self.hi - other.lo,
                        method=Method.weakest(self.method, other.method))

    def __rsub__(self, other):
        return _as_interval(other) - self

    def __neg__(self):
        return Interval(-self.hi, -self.lo, method=self.method)

    def __mul__(self, other):
        other = _as_interval(other)
        products = [self.lo * other.lo, self.lo * other.hi,
                    self.hi * other.lo, self.hi * other.hi]
        return Interval(min(products), max(products),
                        method=Method.weakest(self.method, other.method))

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        return self * (1. / scalar)

    def __pow__(self, exponent):
        """
        Monotone power of an interval with non-negative ends.

        """
        if self.lo < 0:
            raise ValueError('Power of an interval with negative lower end %g' % self.lo)

        if exponent < 0:
            raise ValueError('Interval powers need a non-negative exponent')

        return Interval(self.lo ** exponent, self.hi ** exponent, method=self.method)

    def sqrt(self):
        return self ** 0.5

    def to_list(self):
        return [self.lo, self.hi]

    def __iter__(self):
        return iter((self.lo, self.hi))

    def __repr__(self):
        return 'Interval([%.17g, %.17g], %s)' % (self.lo, self.hi, self.method.value)


def _as_interval(value):
    if isinstance(value, Interval):
        return value

    return Interval.exact(value)
