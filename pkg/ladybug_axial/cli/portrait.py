"""Trace the axial lines of a family and write the portrait as SVG and CSV."""
import click
import sys
import logging

from ladybug_axial.errors import AxialError
from ladybug_axial.portrait import portrait as trace_portrait, signature, \
    blow_down_check, record_signature
from ladybug_axial.render import render_svg, export_csv

from ._helper import run_options, flag_values, load_run_config, report_json, \
    write_output

_logger = logging.getLogger(__name__)


def portrait_outputs(config):
    """Trace the portrait of a RunConfig.

    Returns:
        A tuple with the report dictionary, the SVG text and the CSV text.
    """
    solver = config.solver
    result = trace_portrait(
        config.family.field(), config.bounds, seeds=solver.seed_grid, step=solver.step,
        grid=solver.grid, exclusion_radius=solver.exclusion_radius,
        threads=solver.threads, seed_points=config.seeds)
    svg = render_svg(result.streamlines, result.records, result.region,
                     result.critical_points, title=repr(config.family))
    csv_text = export_csv(result.streamlines)

    reasons = {}
    for line in result.streamlines:
        reasons[line.reason] = reasons.get(line.reason, 0) + 1
    report = {
        'config': config.to_dict(),
        'region': list(result.region),
        'streamline_count': len(result.streamlines),
        'separatrix_count': sum(1 for s in result.streamlines
                                if s.branch == 'separatrix'),
        'stop_reasons': reasons,
        'axiumbilics': [r.to_dict() for r in result.records],
        'signatures': [
            {'position': list(r.position),
             'principal': record_signature(r, 'principal').to_dict(),
             'mean': record_signature(r, 'mean').to_dict()}
            for r in result.records],
        'critical_points': [list(p) for p in result.critical_points]
    }
    family = config.family
    if family.family == 'alpha_a' and result.critical_points:
        try:
            report['whitney_signature'] = signature(
                family.a, solver.index_radius, solver.samples).to_dict()
            report['blow_down'] = blow_down_check(family.a)
        except AxialError as e:
            _logger.warning('No signature of the critical point: %s', e)
            report['whitney_signature'] = None
    return report, svg, csv_text


@click.command('portrait')
@run_options
@click.option('--svg', '-s', 'svg_file', help='Optional file to write the SVG '
              'portrait.', type=str, default=None)
@click.option('--csv', 'csv_file', help='Optional file to write the CSV table of the '
              'streamlines.', type=str, default=None)
@click.option('--seeds', help='Number of streamline seeds per side of the window.',
              type=int, default=None)
@click.option('--step', help='The integration step of the streamlines. By default, '
              '1e-3 of the window width.', type=float, default=None)
def portrait(family, a, eps, b, expressions, region, grid, threads, solver_par,
             config_file, out, svg_file, csv_file, seeds, step):
    """Trace both axial foliations and the separatrices of a family.

    The SVG and CSV are written to the given files and a JSON summary of the
    portrait is printed (or written to the --out file).
    """
    values = flag_values(family, a, eps, b, expressions, region, grid, threads, out)
    values.update({'svg': svg_file, 'csv': csv_file, 'seed_grid': seeds,
                   'step': step})
    config = load_run_config('portrait', config_file, solver_par, **values)
    try:
        report, svg, csv_text = portrait_outputs(config)
        if config.outputs.get('svg'):
            report['svg'] = write_output(svg, config.outputs['svg'])
        if config.outputs.get('csv'):
            report['csv'] = write_output(csv_text, config.outputs['csv'])
        write_output(report_json('portrait', report), config.outputs.get('out'))
    except Exception as e:
        _logger.exception('Failed to trace the portrait.\n{}'.format(e))
        sys.exit(1)
    else:
        sys.exit(0)
