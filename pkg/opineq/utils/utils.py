
import os
import psutil


__all__ = ['cpu_count', 'num_threads']


def cpu_count():
    """
    Get the number of available cores in the node.

    Returns
    -------
        int
            Number of CPUs.

    """
    num_logical_cpus = psutil.cpu_count(logical=True)
    num_cpus = psutil.cpu_count(logical=False) or num_logical_cpus

    return num_cpus or 1


def num_threads(requested=None):
    """
    Number of worker threads for a campaign: the requested number, capped by
    ``OPINEQ_THREADS`` when set, and the physical core count otherwise.

    Parameters
    ----------
    requested : int, optional
        Number of threads asked for, if any.

    Returns
    -------
    int

    """
    limit = os.environ.get('OPINEQ_THREADS', None)
    try:
        limit = int(limit) if limit is not None else None
    except ValueError:
        limit = None

    if limit is not None and limit < 1:
        limit = 1

    threads = requested or limit or cpu_count()
    if limit is not None:
        threads = min(threads, limit)

    return max(1, int(threads))
