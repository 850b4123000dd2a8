
import sys
import json
import click

from .. import __version__
from ..errors import (ConfigInvalid, ParseError, UnknownId, HypothesisViolated,
                      ParamsInvalid, IoFailure, DimensionOutOfRange)
from ..catalog import Verdict, list_registry, lookup, refinement_chain
from ..harness import load_config, run_campaign, eval_single, export_range, search, load_matrix_document
from ..utils import LoggerManager, default_logger as logger


__all__ = ['go']


EXIT_OK = 0
EXIT_VIOLATION = 2
EXIT_USAGE = 3

_usage_errors = (ConfigInvalid, ParseError, UnknownId, HypothesisViolated, ParamsInvalid,
                 IoFailure, DimensionOutOfRange)


class ExitCodeGroup(click.Group):
    """
    Command group mapping outcomes to the exit codes of the tool: 0 without
    violations of sound rows, 2 with a certified violation of one, and 3 for
    configuration, parse and usage errors.

    """

    def main(self, *args, **kwargs):
        kwargs['standalone_mode'] = False

        try:
            code = super().main(*args, **kwargs)

        except click.exceptions.Abort:
            click.echo('Aborted!', err=True)
            sys.exit(1)

        except click.ClickException as exc:
            exc.show()
            sys.exit(EXIT_USAGE)

        except _usage_errors as exc:
            logger.error('%s: %s' % (exc.__class__.__name__, exc))
            sys.exit(EXIT_USAGE)

        sys.exit(code if isinstance(code, int) else EXIT_OK)


def _params(kwargs):
    names = ['alpha', 'beta', 'gamma', 'delta', 'm', 'r', 's', 'p', 'q']
    return {name: kwargs[name] for name in names if kwargs.get(name, None) is not None}


def _dims(value):
    try:
        dims = [int(dim) for dim in value.split(',') if dim.strip()]
    except ValueError:
        raise click.BadParameter('dimensions must be a comma-separated list of integers')

    if not dims:
        raise click.BadParameter('at least one dimension is needed')

    return dims


def _exit_code(result, record):
    if result.verdict is Verdict.VIOLATED and record.sound:
        return EXIT_VIOLATION

    return EXIT_OK


def param_options(command):
    for name in reversed(['alpha', 'beta', 'gamma', 'delta', 'm', 'r', 's', 'p', 'q']):
        command = click.option('--%s' % name, type=float, required=False, show_default=True,
                               help='exponent %s' % name)(command)

    return command


@click.group(cls=ExitCodeGroup)
# log level
@click.option('--info', 'log_level', flag_value='info', default='info', show_default=True,
              help='set log level to INFO')
@click.option('--debug', 'log_level', flag_value='debug', show_default=True,
              help='set log level to DEBUG')
@click.option('--error', 'log_level', flag_value='error', show_default=True,
              help='set log level to ERROR')
@click.option('--timestamps/--plain', default=False, show_default=True,
              help='whether to prefix log messages with time and context')
@click.version_option(version=__version__)
def go(**kwargs):
    if kwargs.get('timestamps', False):
        logger.set_local()
    else:
        logger.set_default()

    LoggerManager.set_level(kwargs.get('log_level', 'info'))


@go.command()
@click.option('--config', '-c', 'config_path', type=str, required=True,
              help='campaign configuration, JSON or YAML')
@click.option('--output', '-o', type=str, required=False,
              help='report path, overriding the configuration')
@click.option('--threads', '-nth', type=int, required=False,
              help='number of worker threads')
def verify(config_path, **kwargs):
    """
    Run a verification campaign.

    """
    config = load_config(config_path)

    if kwargs.get('output', None) is not None:
        config.output = kwargs['output']
    if kwargs.get('threads', None) is not None:
        config.threads = kwargs['threads']

    report = run_campaign(config)

    if config.output is None:
        click.echo(report.dumps())

    return EXIT_VIOLATION if report.sound_violations else EXIT_OK


@go.command(name='eval')
@click.option('--matrix', type=str, required=True,
              help='matrix document')
@click.option('--ineq', 'ineq_id', type=str, required=True,
              help='registry id')
@click.option('--variant', type=str, required=False,
              help='as-printed or corrected')
@param_options
def eval_command(matrix, ineq_id, variant=None, **kwargs):
    """
    Evaluate one inequality on the matrix of a document.

    """
    record = lookup(ineq_id, variant)
    result = eval_single(matrix, ineq_id, params=_params(kwargs), variant=record.variant)

    click.echo(json.dumps(result.to_json(), indent=2))

    return _exit_code(result, record)


@go.command(name='search')
@click.option('--ineq', 'ineq_id', type=str, required=True,
              help='registry id')
@click.option('--variant', type=str, required=False,
              help='as-printed or corrected')
@click.option('--dims', type=str, default='2', show_default=True,
              help='comma-separated dimensions')
@click.option('--budget', type=int, default=1000, show_default=True,
              help='number of evaluations')
@click.option('--seed', type=int, default=0, show_default=True,
              help='seed of the restarts')
@click.option('--output', '-o', type=str, required=False,
              help='write the search outcome to this path')
def search_command(ineq_id, variant=None, **kwargs):
    """
    Look for a counterexample, or the tightest instance, of an inequality.

    """
    if kwargs['budget'] < 1:
        raise click.BadParameter('budget must be at least 1')

    record = lookup(ineq_id, variant)
    outcome = search(ineq_id, variant=record.variant, dims=_dims(kwargs['dims']),
                     budget=kwargs['budget'], seed=kwargs['seed'])

    text = json.dumps(outcome.to_json(), indent=2)
    if kwargs.get('output', None) is not None:
        try:
            with open(kwargs['output'], 'w') as file:
                file.write(text + '\n')
        except OSError as exc:
            raise IoFailure('Could not write %s: %s' % (kwargs['output'], exc))
    else:
        click.echo(text)

    if outcome.confirmed and record.sound:
        return EXIT_VIOLATION

    return EXIT_OK


@go.command(name='range')
@click.option('--matrix', type=str, required=True,
              help='matrix document')
@click.option('--points', type=int, default=720, show_default=True,
              help='number of boundary points')
@click.option('--out', type=str, required=True,
              help='output CSV')
def range_command(matrix, points, out):
    """
    Export the boundary of the numerical range as CSV.

    """
    export_range(matrix, points, out)
    return EXIT_OK


@go.command(name='list')
def list_command():
    """
    List the registry.

    """
    for ineq_id, equation, variant, hypotheses in list_registry():
        click.echo('%-18s %-10s %-34s %s' % (ineq_id, variant, equation, hypotheses))

    return EXIT_OK


@go.command(name='chain')
@click.option('--matrix', type=str, required=True,
              help='matrix document')
def chain_command(matrix):
    """
    Compare the Kittaneh upper bound with its refinements.

    """
    t = load_matrix_document(matrix).get('t', None)
    if t is None:
        raise ParseError('%s does not hold a matrix' % matrix)

    report = refinement_chain(t)
    click.echo(json.dumps(report.to_json(), indent=2))

    return EXIT_OK


if __name__ == '__main__':
    go()
