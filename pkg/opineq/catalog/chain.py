from ..matcore import as_matrix
from .evaluate import evaluate
from .records import Variant
from .terms import Operands


__all__ = ['ChainReport', 'refinement_chain']


_chain_tol = 1e-8

_degenerate_tol = 1e-8


class ChainReport:
    """
    Right-hand sides of the Kittaneh upper bound and of its two refinements
    for one operator, ordered from the weakest bound to the strongest.

    Parameters
    ----------
    kittaneh : Interval
        ``||T*T + TT*|| / 2``.
    sharpened : Interval
        Kittaneh bound minus a quarter of the correction.
    young : Interval
        Kittaneh bound minus half of the correction.
    correction : Interval
        ``inf (<|T| x, x> - <|T*| x, x>)^2`` over unit vectors.

    """

    def __init__(self, kittaneh, sharpened, young, correction):
        self.kittaneh = kittaneh
        self.sharpened = sharpened
        self.young = young
        self.correction = correction

        tol = _chain_tol * max(1., kittaneh.hi)
        self.holds = young.hi <= sharpened.lo + tol and sharpened.hi <= kittaneh.lo + tol
        self.degenerate = correction.hi <= _degenerate_tol

    @property
    def rhs(self):
        return [self.kittaneh, self.sharpened, self.young]

    def to_json(self):
        return {
            'chain': [
                {'id': 'KITT2005_UPPER', 'variant': Variant.AS_PRINTED.value, 'rhs': self.kittaneh.to_list()},
                {'id': 'REM_2_11', 'variant': Variant.CORRECTED.value, 'rhs': self.sharpened.to_list()},
                {'id': 'REM_2_14', 'variant': Variant.AS_PRINTED.value, 'rhs': self.young.to_list()},
            ],
            'correction': self.correction.to_list(),
            'holds': self.holds,
            'degenerate': self.degenerate,
        }

    def __repr__(self):
        return 'ChainReport(%s, %s)' % ('holds' if self.holds else 'broken',
                                        'degenerate' if self.degenerate else 'strict')


def refinement_chain(t, **kwargs):
    """
    Compare the Kittaneh upper bound of ``w^2(T)`` with its refinements.

    The chain holds when every refinement is no larger than the bound it
    refines, within ``1e-8 max(1, rhs)``. It is degenerate when the correction
    vanishes, in which case all three bounds coincide.

    Parameters
    ----------
    t : ComplexMatrix or array-like
    width_rel : float, optional
        Relative width target of the numerical radius enclosures.

    Returns
    -------
    ChainReport

    """
    t = as_matrix(t)

    kittaneh = evaluate('KITT2005_UPPER', t, retry=False, **kwargs).rhs
    sharpened = evaluate('REM_2_11', t, variant=Variant.CORRECTED, retry=False, **kwargs).rhs
    young = evaluate('REM_2_14', t, retry=False, **kwargs).rhs

    operands = Operands(t)
    correction = operands.correction(operands.terms.abs, operands.terms.abs_star)

    return ChainReport(kittaneh, sharpened, young, correction)
