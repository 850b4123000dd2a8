import numpy as np

from ..errors import HypothesisViolated
from ..catalog import Kind, Verdict, lookup
from ..gen import Family, random_stream
from ..matcore import ComplexMatrix
from ..utils import default_logger as logger
from .instances import draw_instance, instance_families
from .shrinker import Shrinker


__all__ = ['SearchResult', 'search', 'CONFIRMED_VIOLATION', 'NO_VIOLATION']


CONFIRMED_VIOLATION = 'CONFIRMED_VIOLATION'
NO_VIOLATION = 'NO_VIOLATION'

# stream tag of the hill-descent perturbations
_descent_tag = 4000

_descent_kinds = (Kind.OPERATOR, Kind.OPERATOR_PAIR, Kind.VECTOR)


class SearchResult:
    """
    Outcome of a counterexample search.

    Parameters
    ----------
    record : IneqRecord
    status : str
        ``CONFIRMED_VIOLATION`` or ``NO_VIOLATION``.
    result : IneqResult or None
        Result of the instance with the smallest slack, or of the shrunk
        violation.
    instance : Instance or None
        Instance of ``result``.
    evaluations : int
        Evaluations spent, shrinking included.
    dims_history : list of int
        Dimensions of the instances accepted while shrinking.

    """

    def __init__(self, record, status, result, instance, evaluations, dims_history):
        self.record = record
        self.status = status
        self.result = result
        self.instance = instance
        self.evaluations = evaluations
        self.dims_history = dims_history

    @property
    def confirmed(self):
        return self.status == CONFIRMED_VIOLATION

    @property
    def witness(self):
        return self.instance.to_json() if self.instance is not None else None

    def to_json(self):
        doc = {
            'id': self.record.id,
            'variant': self.record.variant.value,
            'status': self.status,
            'evaluations': self.evaluations,
            'dims_history': list(self.dims_history),
            'result': None,
        }

        if self.result is not None:
            doc['result'] = self.result.to_json()
            doc['result']['witness'] = self.witness

        return doc

    def __repr__(self):
        slack = self.result.slack if self.result is not None else float('nan')
        return 'SearchResult(%s, %s, slack=%.6e)' % (self.record.id, self.status, slack)


def _perturb(instance, rng, step):
    data = np.array(instance.t.data)
    n = data.shape[0]

    i, j = rng.integers(0, n, size=2)
    data[i, j] += step * (rng.standard_normal() + 1j*rng.standard_normal()) / np.sqrt(2)

    return instance.replace(t=ComplexMatrix(data), coeffs=None, generator=None)


def search(ineq_id, variant=None, dims=(2,), budget=1000, seed=0, **kwargs):
    """
    Look for the instance of smallest slack of a registry row.

    Random restarts cycle through the dimensions and the generator families;
    after each restart the operator is improved by coordinate-wise complex
    perturbations that are kept when they lower the slack. A certified
    violation stops the search and is shrunk, first to principal submatrices
    and then to entries rounded to one decimal, while it stays violated.

    Parameters
    ----------
    ineq_id : str
    variant : Variant or str, optional
    dims : sequence of int, optional
        Dimensions of the restarts, defaults to ``(2,)``.
    budget : int, optional
        Evaluations available to the restarts and descent, defaults to 1000.
    seed : int, optional
    families : list, optional
        Generator families of the restarts, defaults to every family.
    descent_steps : int, optional
        Perturbations tried after each restart, defaults to 8.
    shrink_budget : int, optional
        Evaluations available to shrinking, defaults to 200.
    verdict_rel, width_rel : float, optional
        Evaluation tolerances.

    Returns
    -------
    SearchResult

    """
    record = lookup(ineq_id, variant)
    dims = list(dims)
    families = [Family.parse(family) for family in kwargs.pop('families', list(Family))]
    descent_steps = kwargs.pop('descent_steps', 8)
    shrink_budget = kwargs.pop('shrink_budget', 200)
    steps = kwargs.pop('steps', None)

    if budget < 1:
        raise ValueError('Search budget must be at least 1, got %d' % budget)

    def evaluate(instance):
        try:
            return instance.evaluate(**kwargs)
        except HypothesisViolated:
            return None

    def violated(candidate):
        result = evaluate(candidate)
        if result is not None and result.verdict is Verdict.VIOLATED:
            return result

        return None

    logger.info('Searching %s/%s in dimensions %s with budget %d'
                % (record.id, record.variant.value, dims, budget), context='search')

    best, best_instance = None, None
    evaluations = 0
    restart = 0

    def improves(result):
        return result is not None and (best is None or result.slack < best.slack)

    while evaluations < budget:
        dim = dims[restart % len(dims)]
        usable = instance_families(record, families, dim)
        family = usable[(restart // len(dims)) % len(usable)]

        instance = draw_instance(record, family, dim, seed, restart, params_index=restart)
        result = evaluate(instance)
        evaluations += 1
        restart += 1

        if result is None:
            continue

        if improves(result):
            best, best_instance = result, instance

        if best.verdict is Verdict.VIOLATED:
            break

        if record.kind not in _descent_kinds:
            continue

        rng = random_stream(seed, _descent_tag, dim, restart)
        step = 0.5
        for _ in range(descent_steps):
            if evaluations >= budget:
                break

            candidate = _perturb(instance, rng, step)
            candidate_result = evaluate(candidate)
            evaluations += 1

            if candidate_result is not None and candidate_result.slack < result.slack:
                instance, result = candidate, candidate_result
                if improves(result):
                    best, best_instance = result, instance
                if result.verdict is Verdict.VIOLATED:
                    break
            else:
                step *= 0.5

        if best.verdict is Verdict.VIOLATED:
            break

    if best is None or best.verdict is not Verdict.VIOLATED:
        logger.info('No violation of %s/%s in %d evaluations' % (record.id, record.variant.value, evaluations),
                    context='search')
        history = [best_instance.dim] if best_instance is not None else []
        return SearchResult(record, NO_VIOLATION, best, best_instance, evaluations, history)

    shrinker = Shrinker(steps)
    shrunk, shrunk_result, history, used = shrinker.shrink(best_instance, violated, shrink_budget)
    evaluations += used

    if shrunk_result is not None:
        best, best_instance = shrunk_result, shrunk

    logger.info('Confirmed violation of %s/%s in dimension %d with slack %.6e after %d evaluations'
                % (record.id, record.variant.value, best_instance.dim, best.slack, evaluations),
                context='search')

    return SearchResult(record, CONFIRMED_VIOLATION, best, best_instance, evaluations, history)
