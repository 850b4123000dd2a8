"""
Instances of registry rows: the operands and parameters one evaluation runs on,
drawn from the generators and replayable from their documents.

"""

import numpy as np

from ..catalog import Kind, evaluate, evaluate_scalar
from ..gen import Family, GeneratorSpec, sample, sample_unit_vector, sample_params, random_stream
from ..matcore import as_matrix, vector_to_json


__all__ = ['Instance', 'draw_instance', 'instance_families']


# stream tag of scalar pairs
_scalar_tag = 3000


class Instance:
    """
    Operands and parameters of one evaluation of a registry row.

    Parameters
    ----------
    record : IneqRecord
    params : ExponentParams
    t, s, b : ComplexMatrix, optional
    x, y : ndarray, optional
    coeffs : list of float, optional
    scalars : tuple of float, optional
        ``(a, b)`` of the scalar rows.
    generator : GeneratorSpec, optional
        Draw the instance came from.

    """

    def __init__(self, record, params, **kwargs):
        self.record = record
        self.params = params

        self.t = kwargs.pop('t', None)
        self.s = kwargs.pop('s', None)
        self.b = kwargs.pop('b', None)
        self.x = kwargs.pop('x', None)
        self.y = kwargs.pop('y', None)
        self.coeffs = kwargs.pop('coeffs', None)
        self.scalars = kwargs.pop('scalars', None)
        self.generator = kwargs.pop('generator', None)

    @property
    def dim(self):
        return self.t.n if self.t is not None else 0

    def replace(self, **kwargs):
        values = dict(t=self.t, s=self.s, b=self.b, x=self.x, y=self.y, coeffs=self.coeffs,
                      scalars=self.scalars, generator=self.generator)
        values.update(kwargs)
        params = values.pop('params', self.params)
        return Instance(self.record, params, **values)

    def evaluate(self, **kwargs):
        """
        Evaluate the row on the instance.

        Returns
        -------
        IneqResult

        """
        record = self.record
        if record.kind is Kind.SCALAR:
            a, b = self.scalars
            return evaluate_scalar(record.id, a, b, self.params, variant=record.variant)

        return evaluate(record.id, self.t, self.params, variant=record.variant,
                        s=self.s, b=self.b, x=self.x, y=self.y, coeffs=self.coeffs, **kwargs)

    def to_json(self):
        if self.scalars is not None:
            doc = {'a': self.scalars[0], 'b': self.scalars[1]}
        else:
            doc = self.t.to_json()
            for name in ('s', 'b'):
                if getattr(self, name) is not None:
                    doc[name] = getattr(self, name).to_json()
            for name in ('x', 'y'):
                if getattr(self, name) is not None:
                    doc[name] = vector_to_json(getattr(self, name))
            if self.coeffs is not None:
                doc['coeffs'] = list(self.coeffs)

        doc['params'] = self.params.to_json()
        return doc


def instance_families(record, families, dim):
    """
    Families a row can be drawn from at a given dimension.

    Pair rows draw from the pair family realising their hypothesis. Other rows
    draw from the requested single-matrix families, ``PARAM_2X2`` only in
    dimension 2, and from ``GINIBRE`` when none of them applies.

    """
    if record.kind is Kind.PAIR_VECTOR:
        if 'abs_commutes' in record.hypotheses:
            return [Family.FG_PAIR]
        return [Family.REID_PAIR]

    usable = [family for family in families
              if not family.is_pair and (family is not Family.PARAM_2X2 or dim == 2)]

    return usable or [Family.GINIBRE]


def draw_instance(record, family, dim, seed, index, params_index=0, samples_per_dim=1):
    """
    Draw the instance number ``index`` of a row.

    Parameters
    ----------
    record : IneqRecord
    family : Family
    dim : int
    seed : int
    index : int
        Draw index of the operator.
    params_index : int, optional
        Draw index of the parameters.
    samples_per_dim : int, optional
        Offset separating the draw indices of ``S`` from those of ``T``.

    Returns
    -------
    Instance

    """
    params = sample_params(seed, record, index=params_index)
    kind = record.kind

    if kind is Kind.SCALAR:
        rng = random_stream(seed, _scalar_tag, dim, index)
        a, b = np.exp(rng.uniform(-3., 3., size=2))
        return Instance(record, params, scalars=(float(a), float(b)))

    spec = GeneratorSpec(family, dim, seed=seed, index=index)
    drawn = sample(spec)
    values = dict(generator=spec)

    if family.is_pair:
        values.update(t=drawn.a, b=drawn.b, coeffs=drawn.coeffs)
    else:
        values['t'] = drawn

    if kind is Kind.OPERATOR_PAIR:
        values['s'] = as_matrix(sample(spec.replace(index=index + samples_per_dim)))

    if kind in (Kind.VECTOR, Kind.PAIR_VECTOR):
        values['x'] = sample_unit_vector(dim, seed, 2*index)
        values['y'] = sample_unit_vector(dim, seed, 2*index + 1)

    return Instance(record, params, **values)
