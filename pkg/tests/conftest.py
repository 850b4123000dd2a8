import json

import numpy as np
import pytest

from opineq.matcore import ComplexMatrix


def pytest_addoption(parser):
    parser.addoption('--runslow', action='store_true', default=False,
                     help='run the full-size acceptance runs')


def pytest_collection_modifyitems(config, items):
    if config.getoption('--runslow'):
        return

    skip_slow = pytest.mark.skip(reason='needs --runslow')
    for item in items:
        if 'slow' in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture
def shift():
    return ComplexMatrix([[0, 1], [0, 0]])


@pytest.fixture
def rng():
    return np.random.default_rng(1234)


def ginibre(rng, n):
    return ComplexMatrix((rng.standard_normal((n, n)) + 1j*rng.standard_normal((n, n))) / np.sqrt(2))


def random_psd(rng, n):
    g = ginibre(rng, n).data
    return g @ g.conj().T


def unit_vector(rng, n):
    x = rng.standard_normal(n) + 1j*rng.standard_normal(n)
    return x / np.linalg.norm(x)


@pytest.fixture
def write_doc(tmp_path):
    def write(doc, name='matrix.json'):
        path = tmp_path / name
        path.write_text(json.dumps(doc))
        return str(path)

    return write
