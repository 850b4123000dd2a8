import numpy as np


class PrincipalSubmatrix:
    """
    Drop one coordinate: replace every matrix of the instance by its principal
    submatrix without that row and column, and restrict and renormalise the
    vectors.

    """

    def __init__(self, **kwargs):
        pass

    def candidates(self, instance):
        n = instance.dim
        if n <= 1:
            return

        for drop in range(n):
            keep = [index for index in range(n) if index != drop]

            values = dict(coeffs=None, generator=None)
            for name in ('t', 's', 'b'):
                matrix = getattr(instance, name)
                values[name] = matrix.submatrix(keep) if matrix is not None else None

            restricted = True
            for name in ('x', 'y'):
                vector = getattr(instance, name)
                if vector is None:
                    continue

                vector = vector[keep]
                norm = np.linalg.norm(vector)
                if norm == 0:
                    restricted = False
                    break

                values[name] = vector / norm

            if restricted:
                yield instance.replace(**values)
