"""Count and type the axiumbilic points of the deformed family over an (a, eps) grid."""
import click
import sys
import csv
import io
import logging
from concurrent.futures import ThreadPoolExecutor

from ladybug_axial.errors import AxialError, BoundaryError
from ladybug_axial.family import FamilyParams, count_and_type, expected_census

from ._helper import load_run_config, write_output

_logger = logging.getLogger(__name__)

SCAN_COLUMNS = ('a', 'eps', 'status', 'count', 'types', 'index_sum',
                'expected_types', 'matches')


def scan_cell(a, eps):
    """Get the CSV row of one (a, eps) cell of the scan."""
    try:
        census = count_and_type(FamilyParams(a, eps))
    except BoundaryError as e:
        _logger.info('Cell a = %s, eps = %s is on a boundary: %s', a, eps, e)
        return (a, eps, 'boundary', '', '', '', '', '')
    except AxialError as e:
        _logger.warning('Cell a = %s, eps = %s failed: %s', a, eps, e)
        return (a, eps, 'error', '', '', '', '', '')
    expected = expected_census(a, eps)
    expected_types = sorted(t for t in expected.values() for _ in range(2))
    index_sum = '' if census.index_sum is None else '{:.2f}'.format(census.index_sum)
    return (a, eps, 'ok', census.count, ';'.join(census.types), index_sum,
            ';'.join(expected_types), census.types == expected_types)


def scan_table(config):
    """Get the CSV text of the scan of a RunConfig.

    Cells are computed in parallel with the solver threads and written in the
    order of the a values and then of the eps values.
    """
    cells = [(a, eps) for a in config.scan_values()
             for eps in config.scan['eps_values']]

    def run(cell):
        return scan_cell(*cell)

    if config.solver.threads > 1:
        with ThreadPoolExecutor(max_workers=config.solver.threads) as executor:
            rows = list(executor.map(run, cells))
    else:
        rows = [run(cell) for cell in cells]

    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(SCAN_COLUMNS)
    for row in rows:
        a, eps = row[:2]
        writer.writerow(('{:g}'.format(a), '{:g}'.format(eps)) + tuple(
            str(v).lower() if isinstance(v, bool) else v for v in row[2:]))
    return buffer.getvalue()


@click.command('scan')
@click.option('--a-range', '-ar', help='The a values as 3 numbers: start, stop and '
              'step. The stop value is included.', type=float, nargs=3, default=None)
@click.option('--eps-values', '-ev', help='The eps values separated by commas '
              '(eg. "-0.05,0.05").', type=str, default=None)
@click.option('--threads', '-t', help='Number of worker threads.', type=int,
              default=None)
@click.option('--config', '-c', 'config_file', help='Optional path to a key = value '
              'configuration file. Flags override its values.',
              type=click.Path(exists=True, file_okay=True, dir_okay=False,
                              resolve_path=True), default=None)
@click.option('--out', '-o', help='Optional file to output the CSV. By default, it '
              'will be printed to stdout.', type=str, default=None)
def scan(a_range, eps_values, threads, config_file, out):
    """Count and type the axiumbilic points of alpha_eps over an (a, eps) grid.

    Cells within the guard band of the regime boundaries (|a| near 15/2 or 8)
    are marked "boundary".
    """
    values = {'threads': threads, 'out': out}
    if a_range:
        values.update(dict(zip(('a_start', 'a_stop', 'a_step'), a_range)))
    if eps_values:
        try:
            values['eps_values'] = [float(e) for e in eps_values.split(',')]
        except ValueError:
            raise click.BadParameter('eps values must be numbers. Got {}.'.format(
                eps_values), param_hint='--eps-values')
    config = load_run_config('scan', config_file, None, **values)
    try:
        write_output(scan_table(config), config.outputs.get('out'))
    except Exception as e:
        _logger.exception('Failed to scan the deformed family.\n{}'.format(e))
        sys.exit(1)
    else:
        sys.exit(0)
