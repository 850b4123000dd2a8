from enum import Enum

from ..errors import HypothesisViolated, ParseError
from ..utils import constant_case
from . import hypotheses


__all__ = ['Variant', 'Kind', 'Verdict', 'Leg', 'IneqRecord', 'IneqResult', 'judge']


class Variant(Enum):
    AS_PRINTED = 'AS_PRINTED'
    CORRECTED = 'CORRECTED'

    @classmethod
    def parse(cls, value):
        if value is None or isinstance(value, Variant):
            return value

        try:
            return cls(constant_case(value))
        except ValueError:
            raise ParseError('Unknown variant %r' % (value,))


class Kind(Enum):
    """
    Operands an inequality is evaluated on.

    """

    OPERATOR = 'operator'
    OPERATOR_PAIR = 'operator_pair'
    VECTOR = 'vector'
    PAIR_VECTOR = 'pair_vector'
    SCALAR = 'scalar'


class Verdict(Enum):
    HOLDS = 'HOLDS'
    VIOLATED = 'VIOLATED'
    INCONCLUSIVE = 'INCONCLUSIVE'


class Leg:
    """
    One ``lhs <= rhs`` comparison of an inequality; chained displays have several.

    """

    def __init__(self, lhs, rhs, label=''):
        self.lhs = lhs
        self.rhs = rhs
        self.label = label

    @property
    def slack(self):
        return self.rhs.lo - self.lhs.hi


def judge(lhs, rhs, verdict_rel):
    """
    Certified verdict of ``lhs <= rhs`` from the enclosures of both sides.

    Parameters
    ----------
    lhs : Interval
    rhs : Interval
    verdict_rel : float
        Tolerance relative to ``max(1, rhs.hi)``.

    Returns
    -------
    Verdict

    """
    tol = verdict_rel * max(1., rhs.hi)

    if lhs.lo > rhs.hi + tol:
        return Verdict.VIOLATED

    if lhs.hi <= rhs.lo + tol:
        return Verdict.HOLDS

    return Verdict.INCONCLUSIVE


class IneqRecord:
    """
    Registry row: one inequality display in one variant.

    Parameters
    ----------
    ineq_id : str
        Registry key.
    equation : str
        Label of the display the row evaluates.
    variant : Variant
        Whether the row evaluates the display as printed or its corrected form.
    kind : Kind
        Operands the row needs.
    evaluator : callable
        Function of ``(operands, params)`` returning a list of ``Leg``.
    hypotheses : tuple
        Names of the predicates in ``opineq.catalog.hypotheses`` gating the row.
    fixed : dict, optional
        Parameters pinned by the row, overriding the supplied ones.
    description : str, optional
        Human readable statement.
    notes : str, optional
        Discrepancies and decisions about the display.

    """

    def __init__(self, ineq_id, equation, variant, kind, evaluator, hypotheses=(), **kwargs):
        self.id = ineq_id
        self.equation = equation
        self.variant = variant
        self.kind = kind
        self.evaluator = evaluator
        self.hypotheses = tuple(hypotheses)
        self.fixed = dict(kwargs.pop('fixed', {}))
        self.description = kwargs.pop('description', '')
        self.notes = kwargs.pop('notes', '')
        self.sound = kwargs.pop('sound', True)

    def effective_params(self, params):
        if not self.fixed:
            return params

        return params.replace(**self.fixed)

    def check(self, operands, params):
        """
        Check every hypothesis of the row, raising ``HypothesisViolated`` on the first failure.

        Parameters
        ----------
        operands : Operands or None
        params : ExponentParams

        Returns
        -------

        """
        for name in self.hypotheses:
            predicate = getattr(hypotheses, name)
            if not predicate(operands, params):
                raise HypothesisViolated(name, 'hypothesis "%s" of %s does not hold: %s'
                                         % (name, self.id, predicate.__doc__.strip()))

    @property
    def parametric(self):
        """
        Whether the row has parameter hypotheses, so that different parameter draws give different instances.

        """
        return any(getattr(getattr(hypotheses, name), 'params_only', False) for name in self.hypotheses)

    def params_ok(self, params):
        """
        Whether the parameter-only hypotheses of the row hold.

        """
        params = self.effective_params(params)
        for name in self.hypotheses:
            predicate = getattr(hypotheses, name)
            if getattr(predicate, 'params_only', False) and not predicate(None, params):
                return False

        return True

    def describe_hypotheses(self):
        return '; '.join(getattr(hypotheses, name).__doc__.strip() for name in self.hypotheses)

    def __repr__(self):
        return 'IneqRecord(%s, %s)' % (self.id, self.variant.value)


class IneqResult:
    """
    Outcome of evaluating one inequality instance.

    Parameters
    ----------
    record : IneqRecord
    legs : list of Leg
    verdict_rel : float
        Relative verdict tolerance.
    params : ExponentParams, optional
        Parameters the row was evaluated with.
    witness : dict, optional
        Document from which the instance can be replayed.

    """

    def __init__(self, record, legs, verdict_rel, params=None, witness=None):
        if not legs:
            raise ValueError('Evaluation of %s produced no comparison' % record.id)

        self.record = record
        self.params = params
        self.witness = witness

        verdicts = [judge(leg.lhs, leg.rhs, verdict_rel) for leg in legs]
        tightest = min(range(len(legs)), key=lambda index: legs[index].slack)

        self.legs = legs
        self.lhs = legs[tightest].lhs
        self.rhs = legs[tightest].rhs

        if Verdict.VIOLATED in verdicts:
            self.verdict = Verdict.VIOLATED
        elif all(verdict is Verdict.HOLDS for verdict in verdicts):
            self.verdict = Verdict.HOLDS
        else:
            self.verdict = Verdict.INCONCLUSIVE

    @property
    def id(self):
        return self.record.id

    @property
    def variant(self):
        return self.record.variant

    @property
    def slack(self):
        return self.rhs.lo - self.lhs.hi

    def is_equality(self, equality_abs):
        return abs(self.slack) <= equality_abs

    def to_json(self):
        doc = {
            'id': self.id,
            'variant': self.variant.value,
            'equation': self.record.equation,
            'lhs': self.lhs.to_list(),
            'rhs': self.rhs.to_list(),
            'slack': self.slack,
            'verdict': self.verdict.value,
            'witness': self.witness,
        }

        if len(self.legs) > 1:
            doc['legs'] = [{'label': leg.label, 'lhs': leg.lhs.to_list(), 'rhs': leg.rhs.to_list()}
                           for leg in self.legs]

        if self.params is not None:
            doc['params'] = self.params.to_json()

        return doc

    def __repr__(self):
        return 'IneqResult(%s, %s, lhs=%r, rhs=%r, %s)' % (self.id, self.variant.value,
                                                          self.lhs, self.rhs, self.verdict.value)
