import numpy as np

from ...matcore import ComplexMatrix


class RoundEntries:
    """
    Round the entries of every matrix of the instance, and the scalars of the
    scalar rows, to a fixed number of decimals.

    Parameters
    ----------
    decimals : int, optional
        Decimals kept, defaults to 1.

    """

    def __init__(self, **kwargs):
        self.decimals = kwargs.pop('decimals', 1)

    def _round(self, matrix):
        if matrix is None:
            return None

        data = matrix.data
        rounded = np.round(data.real, self.decimals) + 1j*np.round(data.imag, self.decimals)
        return ComplexMatrix(rounded)

    def candidates(self, instance):
        if instance.scalars is not None:
            scalars = tuple(float(np.round(value, self.decimals)) for value in instance.scalars)
            if scalars != tuple(instance.scalars) and min(scalars) > 0:
                yield instance.replace(scalars=scalars)
            return

        values = {name: self._round(getattr(instance, name)) for name in ('t', 's', 'b')}

        rounded = values['t']
        if rounded == instance.t or not np.any(rounded.data):
            return

        yield instance.replace(coeffs=None, generator=None, **values)
