from ..utils import camel_case

from . import shrink as steps_module


__all__ = ['Shrinker']


class Shrinker:
    """
    Ordered pipeline of shrink steps reducing a failing instance while it keeps failing.

    Each step proposes smaller candidates of the current instance; the first
    candidate that still fails replaces it and the pipeline starts over, until
    no step makes progress or the budget is spent.

    Parameters
    ----------
    steps : list, optional
        Steps of the pipeline. Steps can be objects with a ``candidates`` method or
        strings naming a default step, defaults to ``principal_submatrix`` and
        ``round_entries``.

    """

    def __init__(self, steps=None, **kwargs):
        steps = steps or ['principal_submatrix', 'round_entries']

        self._steps = []
        for step in steps:
            if isinstance(step, str):
                step_module = getattr(steps_module, step)
                step = getattr(step_module, camel_case(step))

                self._steps.append(step(**kwargs))

            else:
                self._steps.append(step)

    def shrink(self, instance, fails, budget):
        """
        Shrink ``instance``.

        Parameters
        ----------
        instance : Instance
            Failing instance.
        fails : callable
            Function of an instance returning its failing result, or None.
        budget : int
            Maximum number of candidates evaluated.

        Returns
        -------
        Instance
            Smallest failing instance found.
        IneqResult or None
            Its result, None when no candidate failed.
        list of int
            Dimensions of the accepted instances, in order.
        int
            Candidates evaluated.

        """
        history = [instance.dim]
        result = None
        used = 0

        progress = True
        while progress and used < budget:
            progress = False

            for step in self._steps:
                for candidate in step.candidates(instance):
                    if used >= budget:
                        break

                    used += 1
                    failing = fails(candidate)
                    if failing is not None:
                        instance, result = candidate, failing
                        history.append(instance.dim)
                        progress = True
                        break

                if progress:
                    break

        return instance, result, history, used
