from ..errors import HypothesisViolated
from ..matcore import WIDTH_REL, VERDICT_REL, SCALAR_VERDICT_REL
from ..radius import Interval
from ..utils import default_logger as logger
from .params import ExponentParams
from .records import Kind, Verdict, Leg, IneqResult
from .registry import lookup
from .terms import Operands


__all__ = ['evaluate', 'evaluate_scalar']


# tightening of the width target on the retry of an inconclusive evaluation
_retry_factor = 100.


def evaluate(ineq_id, t=None, params=None, variant=None, **kwargs):
    """
    Evaluate one inequality on one set of operands.

    Both sides are computed as certified enclosures and compared with a
    tolerance relative to the right-hand side. An INCONCLUSIVE outcome is
    retried once with the numerical radius width target tightened.

    Parameters
    ----------
    ineq_id : str
        Registry id.
    t : ComplexMatrix or array-like
        Operator ``T``, or ``A`` for the pair forms.
    params : ExponentParams or dict, optional
        Exponents, the defaults of ``ExponentParams`` when not given.
    variant : Variant or str, optional
        Variant of the row, its sound row when not given.
    s : ComplexMatrix, optional
        Second operator ``S`` of the sum inequalities.
    b : ComplexMatrix, optional
        Partner ``B`` of the pair forms.
    x, y : array-like, optional
        Vectors of the pointwise forms.
    coeffs : sequence of float, optional
        Polynomial with ``B = q(A)`` or ``B = q(|A|)``.
    verdict_rel : float, optional
        Relative verdict tolerance, defaults to ``VERDICT_REL``.
    width_rel : float, optional
        Relative width target of the numerical radius enclosures, defaults to ``WIDTH_REL``.
    retry : bool, optional
        Whether to retry an INCONCLUSIVE outcome, defaults to ``True``.

    Returns
    -------
    IneqResult

    Raises
    ------
    UnknownId
        When the id or variant is not in the registry.
    HypothesisViolated
        When the operands or parameters do not satisfy a hypothesis of the row.

    """
    record = lookup(ineq_id, variant)
    if record.kind is Kind.SCALAR:
        raise HypothesisViolated('operator_operands',
                                 '%s is a scalar inequality, evaluate it with evaluate_scalar' % record.id)

    verdict_rel = kwargs.pop('verdict_rel', VERDICT_REL)
    width_rel = kwargs.pop('width_rel', WIDTH_REL)
    retry = kwargs.pop('retry', True)
    context = '%s/%s' % (record.id, record.variant.value)

    if t is None:
        raise HypothesisViolated('requires_t', 'an operator T is required by %s' % record.id)

    params = record.effective_params(ExponentParams.coerce(params))
    operands = Operands(t, width_rel=width_rel, context=context, **kwargs)
    record.check(operands, params)

    witness = operands.to_json()
    witness['params'] = params.to_json()

    result = IneqResult(record, record.evaluator(operands, params), verdict_rel,
                        params=params, witness=witness)

    if result.verdict is Verdict.INCONCLUSIVE and retry:
        logger.warning('Inconclusive with slack %.3e, retrying with width target %.1e'
                       % (result.slack, width_rel / _retry_factor), context=context)

        operands.width_rel = width_rel / _retry_factor
        result = IneqResult(record, record.evaluator(operands, params), verdict_rel,
                            params=params, witness=witness)

    logger.debug('lhs %r rhs %r slack %.3e %s' % (result.lhs, result.rhs, result.slack, result.verdict.value),
                 context=context)

    return result


def evaluate_scalar(ineq_id, a, b, params=None, **kwargs):
    """
    Evaluate one of the scalar Young-type inequalities in floating point.

    Parameters
    ----------
    ineq_id : str
        Registry id of a scalar row.
    a, b : float
        Positive scalars.
    params : ExponentParams or dict, optional
    verdict_rel : float, optional
        Relative verdict tolerance, defaults to ``SCALAR_VERDICT_REL``.

    Returns
    -------
    IneqResult

    """
    record = lookup(ineq_id, kwargs.pop('variant', None))
    if record.kind is not Kind.SCALAR:
        raise HypothesisViolated('scalar_operands', '%s is not a scalar inequality' % record.id)

    verdict_rel = kwargs.pop('verdict_rel', SCALAR_VERDICT_REL)

    params = record.effective_params(ExponentParams.coerce(params))
    a, b = float(a), float(b)
    record.check((a, b), params)

    lhs, rhs = record.evaluator(a, b, params)
    leg = Leg(Interval.exact(lhs), Interval.exact(rhs))

    return IneqResult(record, [leg], verdict_rel, params=params, witness={'a': a, 'b': b})
