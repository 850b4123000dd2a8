import json

from ..errors import IoFailure, ParseError, ConfigInvalid
from ..catalog import Kind, ExponentParams, lookup, evaluate, evaluate_scalar
from ..matcore import ComplexMatrix, vector_from_json
from ..radius import range_boundary
from ..utils import default_logger as logger


__all__ = ['load_matrix_document', 'eval_single', 'export_range']


_companions = ('s', 'b', 'x', 'y', 'coeffs', 'params', 'generator')


def _read_json(path):
    try:
        with open(path, 'r') as file:
            text = file.read()
    except OSError as exc:
        raise IoFailure('Could not read %s: %s' % (path, exc))

    try:
        return json.loads(text)
    except ValueError as exc:
        raise ParseError('%s is not valid JSON: %s' % (path, exc))


def load_matrix_document(path):
    """
    Read a matrix document, with its optional companion entries.

    The document is the matrix format ``{"n", "re", "im"}`` of ``T``, optionally
    with ``"s"`` and ``"b"`` matrices, ``"x"`` and ``"y"`` vectors, polynomial
    ``"coeffs"`` and ``"params"``; or ``{"a", "b"}`` for the scalar rows.

    Parameters
    ----------
    path : str

    Returns
    -------
    dict
        Keyword arguments of ``evaluate``, or ``scalars`` for a scalar document,
        and ``params`` when present.

    Raises
    ------
    ParseError
        When the document is malformed.
    IoFailure
        When the file cannot be read.

    """
    doc = _read_json(path)
    if not isinstance(doc, dict):
        raise ParseError('Matrix document must be a JSON object')

    if 'n' not in doc and 'a' in doc and 'b' in doc:
        try:
            scalars = float(doc['a']), float(doc['b'])
        except (TypeError, ValueError):
            raise ParseError('Scalars "a" and "b" must be numbers')

        return {'scalars': scalars, 'params': doc.get('params', None)}

    unknown = set(doc.keys()) - {'n', 're', 'im'} - set(_companions)
    if unknown:
        raise ParseError('Unknown matrix document keys %s' % ', '.join(sorted(unknown)))

    operands = {'t': ComplexMatrix.from_json(doc)}

    for name in ('s', 'b'):
        if name in doc:
            operands[name] = ComplexMatrix.from_json(doc[name])

    for name in ('x', 'y'):
        if name in doc:
            operands[name] = vector_from_json(doc[name])

    if 'coeffs' in doc:
        try:
            operands['coeffs'] = [float(c) for c in doc['coeffs']]
        except (TypeError, ValueError):
            raise ParseError('Polynomial "coeffs" must be a list of numbers')

    operands['params'] = doc.get('params', None)
    return operands


def eval_single(path, ineq_id, params=None, variant=None, **kwargs):
    """
    Evaluate one inequality on the operands of a matrix document.

    Parameters given explicitly take precedence over those of the document.

    Parameters
    ----------
    path : str
        Matrix document.
    ineq_id : str
    params : dict, optional
        Parameters overriding the document ones.
    variant : Variant or str, optional

    Returns
    -------
    IneqResult

    """
    record = lookup(ineq_id, variant)
    operands = load_matrix_document(path)

    merged = dict(operands.pop('params', None) or {})
    params = dict(params or {})
    if 'p' in params and 'q' not in params:
        merged.pop('q', None)
    merged.update(params)
    merged = ExponentParams.from_json(merged)

    logger.debug('Evaluating %s/%s on %s' % (record.id, record.variant.value, path), context='eval')

    if record.kind is Kind.SCALAR:
        if 'scalars' not in operands:
            raise ParseError('%s needs a scalar document {"a", "b"}' % record.id)

        a, b = operands['scalars']
        return evaluate_scalar(record.id, a, b, merged, variant=record.variant, **kwargs)

    if 'scalars' in operands:
        raise ParseError('%s needs a matrix document' % record.id)

    t = operands.pop('t')
    return evaluate(record.id, t, merged, variant=record.variant, **operands, **kwargs)


def export_range(path, points, out):
    """
    Write the sampled boundary of the numerical range of the matrix of a document as CSV.

    Parameters
    ----------
    path : str
        Matrix document.
    points : int
        Number of boundary points, at least 3.
    out : str
        Output CSV path.

    Returns
    -------
    RangeBoundary

    """
    if points < 3:
        raise ConfigInvalid('At least 3 boundary points are needed, got %d' % points)

    t = load_matrix_document(path).get('t', None)
    if t is None:
        raise ParseError('%s does not hold a matrix' % path)

    boundary = range_boundary(t, points)
    boundary.to_csv(out)

    logger.info('Wrote %d boundary points to %s' % (points, out), context='range')
    return boundary
