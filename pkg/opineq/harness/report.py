import json
import datetime

from ..errors import IoFailure
from ..catalog import Verdict


__all__ = ['RowAggregate', 'CampaignReport', 'SCHEMA']


SCHEMA = 'opineq-report/1'

# witnesses kept inline per row
_max_witnesses = 8


def _version():
    from .. import __version__
    return __version__


class RowAggregate:
    """
    Verdict counts of one ``(id, variant, dim)`` row of a campaign, with its
    tightest instance, its equality witnesses and its violations.

    """

    def __init__(self, record, dim):
        self.record = record
        self.dim = dim

        self.count = 0
        self.holds = 0
        self.violated = 0
        self.inconclusive = 0
        self.skipped = 0

        self.min_slack = None
        self.min_slack_witness = None
        self.equality_witnesses = []
        self.violations = []

    @property
    def key(self):
        return self.record.id, self.record.variant.value, self.dim

    def add_skipped(self):
        self.count += 1
        self.skipped += 1

    def add(self, result, witness, equality_abs):
        """
        Count one evaluated instance.

        Parameters
        ----------
        result : IneqResult
        witness : dict
            Replayable document of the instance.
        equality_abs : float
            Slack magnitude below which the instance is an equality witness.

        Returns
        -------

        """
        self.count += 1

        if result.verdict is Verdict.HOLDS:
            self.holds += 1
        elif result.verdict is Verdict.VIOLATED:
            self.violated += 1
        else:
            self.inconclusive += 1

        entry = result.to_json()
        entry['witness'] = witness

        if self.min_slack is None or result.slack < self.min_slack:
            self.min_slack = result.slack
            self.min_slack_witness = entry

        if result.verdict is Verdict.VIOLATED and len(self.violations) < _max_witnesses:
            self.violations.append(entry)

        elif result.is_equality(equality_abs) and len(self.equality_witnesses) < _max_witnesses:
            self.equality_witnesses.append(entry)

    def to_json(self):
        return {
            'id': self.record.id,
            'variant': self.record.variant.value,
            'equation': self.record.equation,
            'sound': self.record.sound,
            'dim': self.dim,
            'count': self.count,
            'holds': self.holds,
            'violated': self.violated,
            'inconclusive': self.inconclusive,
            'skipped': self.skipped,
            'min_slack': self.min_slack,
            'min_slack_witness': self.min_slack_witness,
            'equality_witnesses': self.equality_witnesses,
            'violations': self.violations,
        }


class CampaignReport:
    """
    Outcome of a campaign, one aggregate per ``(id, variant, dim)``.

    Parameters
    ----------
    config : CampaignConfig
    rows : list of RowAggregate

    """

    def __init__(self, config, rows):
        self.config = config
        self.rows = sorted(rows, key=lambda row: row.key)
        self.timestamp = datetime.datetime.now(datetime.timezone.utc).isoformat()

    @property
    def total(self):
        return sum(row.count for row in self.rows)

    @property
    def skipped(self):
        return sum(row.skipped for row in self.rows)

    @property
    def sound_violations(self):
        """
        Number of certified violations of rows that are expected to hold.

        """
        return sum(row.violated for row in self.rows if row.record.sound)

    def row(self, ineq_id, variant=None, dim=None):
        for row in self.rows:
            if row.record.id != ineq_id:
                continue
            if variant is not None and row.record.variant.value != str(variant).upper():
                continue
            if dim is not None and row.dim != dim:
                continue
            return row

        return None

    def to_json(self):
        return {
            'schema': SCHEMA,
            'version': _version(),
            'seed': self.config.seed,
            'timestamp': self.timestamp,
            'config': self.config.to_json(),
            'totals': {
                'count': self.total,
                'holds': sum(row.holds for row in self.rows),
                'violated': sum(row.violated for row in self.rows),
                'inconclusive': sum(row.inconclusive for row in self.rows),
                'skipped': self.skipped,
                'sound_violations': self.sound_violations,
            },
            'rows': [row.to_json() for row in self.rows],
        }

    def dumps(self):
        return json.dumps(self.to_json(), indent=2)

    def write(self, path):
        """
        Write the report as JSON.

        Parameters
        ----------
        path : str

        Returns
        -------

        """
        try:
            with open(path, 'w') as file:
                file.write(self.dumps())
                file.write('\n')
        except OSError as exc:
            raise IoFailure('Could not write report to %s: %s' % (path, exc))
