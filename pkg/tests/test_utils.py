import io

import pytest

from opineq.utils import (snake_case, camel_case, constant_case, num_threads, cpu_count,
                          LoggerManager, default_logger)


@pytest.mark.parametrize('name, expected', [
    ('principal_submatrix', 'PrincipalSubmatrix'),
    ('round_entries', 'RoundEntries'),
    ('round-entries', 'RoundEntries'),
])
def test_camel_case(name, expected):
    assert camel_case(name) == expected


def test_snake_case():
    assert snake_case('PrincipalSubmatrix') == 'principal_submatrix'
    assert snake_case('AS_PRINTED') == 'as_printed'


def test_constant_case():
    assert constant_case('as-printed') == 'AS_PRINTED'
    assert constant_case('nilpotent shift') == 'NILPOTENT_SHIFT'


def test_num_threads(monkeypatch):
    monkeypatch.delenv('OPINEQ_THREADS', raising=False)
    assert num_threads() == cpu_count()
    assert num_threads(3) == 3

    monkeypatch.setenv('OPINEQ_THREADS', '2')
    assert num_threads() == 2
    assert num_threads(8) == 2
    assert num_threads(1) == 1

    monkeypatch.setenv('OPINEQ_THREADS', 'many')
    assert num_threads(5) == 5


@pytest.fixture
def captured():
    stream = io.StringIO()

    logger = LoggerManager()
    logger._stream = stream
    logger.set_local()

    yield logger, stream

    LoggerManager.set_level('info')
    default_logger.set_default()


def test_logger_context(captured):
    logger, stream = captured

    logger.info('evaluated 4 rows', context='campaign')
    logger.debug('hidden at info level')

    text = stream.getvalue()
    assert 'evaluated 4 rows' in text
    assert 'CAMPAIGN' in text
    assert 'INFO' in text
    assert 'hidden' not in text


def test_logger_levels(captured):
    logger, stream = captured

    LoggerManager.set_level('debug')
    logger.debug('shown at debug level')

    LoggerManager.set_level('error')
    logger.warning('dropped')
    logger.error('failed', context='search')

    text = stream.getvalue()
    assert 'shown at debug level' in text
    assert 'dropped' not in text
    assert 'failed' in text


def test_logger_leaves_stdout_alone(captured, capsys):
    logger, stream = captured

    logger.info('first line\nsecond line', context='report')
    logger.error('no trailing newline')

    out = capsys.readouterr().out
    assert out == ''

    text = stream.getvalue()
    assert 'first line\nsecond line' in text
    assert 'no trailing newline' in text
    assert text.count('REPORT') == 1
