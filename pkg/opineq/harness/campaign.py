from concurrent.futures import ThreadPoolExecutor

from ..errors import HypothesisViolated, CampaignFailure
from ..catalog import Verdict, select_records
from ..utils import default_logger as logger, num_threads
from .instances import draw_instance, instance_families
from .report import RowAggregate, CampaignReport


__all__ = ['run_campaign']


class _Task:
    """
    One instance of a campaign, identified by its sort key.

    """

    def __init__(self, record, dim, index, params_index, family):
        self.record = record
        self.dim = dim
        self.index = index
        self.params_index = params_index
        self.family = family

    @property
    def key(self):
        return self.record.id, self.record.variant.value, self.dim, self.index, self.params_index


def _tasks(config, records):
    for record in records:
        draws = config.params_per_sample if record.parametric else 1

        for dim in config.dims:
            families = instance_families(record, config.families, dim)

            for index in range(config.samples_per_dim):
                family = families[index % len(families)]

                for draw in range(draws):
                    yield _Task(record, dim, index, index*draws + draw, family)


def _run_task(task, config):
    instance = draw_instance(task.record, task.family, task.dim, config.seed, task.index,
                             params_index=task.params_index, samples_per_dim=config.samples_per_dim)

    try:
        result = instance.evaluate(verdict_rel=config.verdict_rel, width_rel=config.width_rel)
    except HypothesisViolated as exc:
        logger.debug('Skipped draw %d: %s' % (task.index, exc), context=task.record.id)
        return task, instance, None

    return task, instance, result


def _witness(instance):
    doc = instance.to_json()
    if instance.generator is not None:
        doc['generator'] = instance.generator.to_json()

    return doc


def run_campaign(config):
    """
    Evaluate the selected registry rows on seeded draws and aggregate the verdicts.

    Instances are evaluated concurrently and aggregated in the order of
    ``(id, variant, dim, draw index)``, so that the report does not depend on
    the schedule.

    Parameters
    ----------
    config : CampaignConfig

    Returns
    -------
    CampaignReport

    Raises
    ------
    CampaignFailure
        When evaluations raise errors other than failed hypotheses.
    IoFailure
        When the report cannot be written.

    """
    records = select_records(config.ineq_ids, config.variants)
    tasks = list(_tasks(config, records))
    threads = num_threads(config.threads)

    logger.info('Running campaign of %d instances over %d rows with %d threads'
                % (len(tasks), len(records), threads), context='campaign')

    outcomes = []
    failure = None
    with ThreadPoolExecutor(max_workers=threads) as executor:
        futures = [executor.submit(_run_task, task, config) for task in tasks]

        for future in futures:
            try:
                outcomes.append(future.result())
            except Exception as exc:
                if failure is None:
                    failure = CampaignFailure(exc)
                else:
                    failure.add(exc)

    if failure is not None:
        raise failure

    outcomes.sort(key=lambda outcome: outcome[0].key)

    rows = {}
    for task, instance, result in outcomes:
        row_key = (task.record.id, task.record.variant.value, task.dim)
        if row_key not in rows:
            rows[row_key] = RowAggregate(task.record, task.dim)
        row = rows[row_key]

        if result is None:
            row.add_skipped()
            continue

        row.add(result, _witness(instance), config.equality_abs)

        if result.verdict is Verdict.VIOLATED and task.record.sound:
            logger.error('Certified violation of %s/%s in dimension %d, draw %d: slack %.6e'
                         % (task.record.id, task.record.variant.value, task.dim, task.index, result.slack),
                         context='campaign')

    report = CampaignReport(config, list(rows.values()))

    for row in report.rows:
        logger.info('%-18s %-10s n=%-3d count %d holds %d violated %d inconclusive %d skipped %d'
                    % (row.record.id, row.record.variant.value, row.dim, row.count,
                       row.holds, row.violated, row.inconclusive, row.skipped), context='campaign')

    logger.info('Campaign finished: %d instances, %d certified violations of sound rows'
                % (report.total, report.sound_violations), context='campaign')

    if config.output is not None:
        report.write(config.output)

    return report
