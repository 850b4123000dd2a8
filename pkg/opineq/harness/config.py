import os
import json

import yaml

from ..errors import ConfigInvalid, IoFailure, ParseError, UnknownId
from ..gen import Family, MAX_DIM
from ..catalog import ineq_ids
from ..matcore import VERDICT_REL, WIDTH_REL, EQUALITY_ABS


__all__ = ['CampaignConfig', 'load_config']


_variants = ('as_printed', 'corrected', 'both')

_tolerance_keys = ('verdict_rel', 'equality_abs', 'width_rel')

_keys = ('dims', 'samples_per_dim', 'seed', 'ineq_ids', 'variants', 'families',
         'params_per_sample', 'tolerances', 'output', 'threads')


def _positive_int(name, value):
    if isinstance(value, bool) or not isinstance(value, int) or value < 1:
        raise ConfigInvalid('"%s" must be a positive integer, got %r' % (name, value))

    return value


class CampaignConfig:
    """
    Configuration of a verification campaign.

    Parameters
    ----------
    dims : list of int
        Dimensions to sample, each in ``[1, 256]``.
    samples_per_dim : int
        Samples per dimension and registry row.
    seed : int, optional
        Non-negative seed, defaults to 0.
    ineq_ids : str or list, optional
        ``"all"`` (default) or a list of registry ids.
    variants : str, optional
        ``"as_printed"``, ``"corrected"`` or ``"both"`` (default).
    families : list of str, optional
        Generator families cycled through by draw index, defaults to ``["GINIBRE"]``.
    params_per_sample : int, optional
        Parameter draws per sample of rows with parameter hypotheses, defaults to 1.
    tolerances : dict, optional
        Overrides of ``verdict_rel``, ``equality_abs`` and ``width_rel``.
    output : str, optional
        Report path.
    threads : int, optional
        Worker threads, capped by ``OPINEQ_THREADS``.

    """

    def __init__(self, **kwargs):
        unknown = set(kwargs.keys()) - set(_keys)
        if unknown:
            raise ConfigInvalid('Unknown configuration keys %s' % ', '.join(sorted(unknown)))

        dims = kwargs.pop('dims', None)
        if not isinstance(dims, (list, tuple)) or not dims:
            raise ConfigInvalid('"dims" must be a non-empty list of dimensions')

        for dim in dims:
            if isinstance(dim, bool) or not isinstance(dim, int) or not 1 <= dim <= MAX_DIM:
                raise ConfigInvalid('Dimensions must be integers in [1, %d], got %r' % (MAX_DIM, dim))

        self.dims = list(dims)
        self.samples_per_dim = _positive_int('samples_per_dim', kwargs.pop('samples_per_dim', None))
        self.params_per_sample = _positive_int('params_per_sample', kwargs.pop('params_per_sample', 1))

        seed = kwargs.pop('seed', 0)
        if isinstance(seed, bool) or not isinstance(seed, int) or not 0 <= seed < 2**64:
            raise ConfigInvalid('"seed" must be an unsigned 64-bit integer, got %r' % (seed,))
        self.seed = seed

        ids = kwargs.pop('ineq_ids', 'all')
        if ids != 'all':
            if isinstance(ids, str) or not isinstance(ids, (list, tuple)):
                raise ConfigInvalid('"ineq_ids" must be "all" or a list of ids')

            known = ineq_ids()
            for ineq_id in ids:
                if ineq_id not in known:
                    raise ConfigInvalid('Unknown inequality id %r' % (ineq_id,))
            ids = list(ids)
        self.ineq_ids = ids

        variants = str(kwargs.pop('variants', 'both')).lower().replace('-', '_')
        if variants not in _variants:
            raise ConfigInvalid('"variants" must be one of %s, got %r' % (', '.join(_variants), variants))
        self.variants = variants

        families = kwargs.pop('families', ['GINIBRE'])
        if isinstance(families, str) or not isinstance(families, (list, tuple)) or not families:
            raise ConfigInvalid('"families" must be a non-empty list of family names')

        try:
            self.families = [Family.parse(family) for family in families]
        except ParseError as exc:
            raise ConfigInvalid(str(exc))

        tolerances = kwargs.pop('tolerances', None) or {}
        if not isinstance(tolerances, dict):
            raise ConfigInvalid('"tolerances" must be an object')

        unknown = set(tolerances.keys()) - set(_tolerance_keys)
        if unknown:
            raise ConfigInvalid('Unknown tolerances %s' % ', '.join(sorted(unknown)))

        for name, value in tolerances.items():
            if isinstance(value, bool) or not isinstance(value, (int, float)) or not value > 0:
                raise ConfigInvalid('Tolerance "%s" must be a positive number, got %r' % (name, value))

        self.verdict_rel = float(tolerances.get('verdict_rel', VERDICT_REL))
        self.equality_abs = float(tolerances.get('equality_abs', EQUALITY_ABS))
        self.width_rel = float(tolerances.get('width_rel', WIDTH_REL))

        self.output = kwargs.pop('output', None)
        if self.output is not None and not isinstance(self.output, str):
            raise ConfigInvalid('"output" must be a path')

        threads = kwargs.pop('threads', None)
        self.threads = _positive_int('threads', threads) if threads is not None else None

    @property
    def tolerances(self):
        return {
            'verdict_rel': self.verdict_rel,
            'equality_abs': self.equality_abs,
            'width_rel': self.width_rel,
        }

    def to_json(self):
        return {
            'dims': list(self.dims),
            'samples_per_dim': self.samples_per_dim,
            'seed': self.seed,
            'ineq_ids': self.ineq_ids if self.ineq_ids == 'all' else list(self.ineq_ids),
            'variants': self.variants,
            'families': [family.value for family in self.families],
            'params_per_sample': self.params_per_sample,
            'tolerances': self.tolerances,
        }

    @classmethod
    def from_json(cls, doc):
        if not isinstance(doc, dict):
            raise ConfigInvalid('Configuration must be an object')

        try:
            return cls(**doc)
        except UnknownId as exc:
            raise ConfigInvalid(str(exc))


def load_config(path):
    """
    Read a campaign configuration from a JSON or YAML file, chosen by extension.

    Parameters
    ----------
    path : str

    Returns
    -------
    CampaignConfig

    Raises
    ------
    ConfigInvalid
        When the file does not parse or holds an invalid configuration.
    IoFailure
        When the file cannot be read.

    """
    try:
        with open(path, 'r') as file:
            text = file.read()
    except OSError as exc:
        raise IoFailure('Could not read configuration %s: %s' % (path, exc))

    extension = os.path.splitext(path)[1].lower()
    try:
        if extension in ('.yml', '.yaml'):
            doc = yaml.safe_load(text)
        else:
            doc = json.loads(text)
    except (ValueError, yaml.YAMLError) as exc:
        raise ConfigInvalid('Could not parse configuration %s: %s' % (path, exc))

    return CampaignConfig.from_json(doc)
