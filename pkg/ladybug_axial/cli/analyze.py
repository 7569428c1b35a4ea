"""Locate, classify and index the singular points of an axial configuration."""
import click
import sys
import math
import logging

from ladybug_axial.errors import AxialError, BoundaryError, NonHyperbolicError
from ladybug_axial.family import count_and_type, lie_cartan_topology
from ladybug_axial.blowup import resolution_portrait
from ladybug_axial.umbilic import find_axiumbilics, index

from ._helper import run_options, flag_values, load_run_config, report_json, \
    write_output

_logger = logging.getLogger(__name__)


def _critical_points(config, search, bounds):
    """Critical points found by the search plus those known from the family."""
    points = list(search.critical_points)
    u_min, u_max, v_min, v_max = bounds
    for known in config.family.known_critical_points():
        inside = u_min <= known[0] <= u_max and v_min <= known[1] <= v_max
        near = any(math.hypot(p[0] - known[0], p[1] - known[1]) <
                   config.solver.exclusion_radius for p in points)
        if inside and not near:
            points.append(known)
    return sorted(points)


def analyze_report(config):
    """Get the analysis report of a RunConfig as a dictionary."""
    field = config.family.field()
    bounds = config.bounds
    solver = config.solver
    search = find_axiumbilics(field, bounds, solver.grid, solver.merge_distance,
                              solver.iterations)
    critical = []
    for point in _critical_points(config, search, bounds):
        entry = {'position': list(point), 'index': None}
        try:
            entry['index'] = index(field, point, solver.index_radius, solver.samples)
        except AxialError as e:
            _logger.warning('No index at the critical point %s: %s', point, e)
            entry['note'] = str(e)
        critical.append(entry)

    indexes = [r.index for r in search.records]
    report = {
        'config': config.to_dict(),
        'region': list(bounds),
        'axiumbilics': [r.to_dict() for r in search.records],
        'unconverged': [r.to_dict() for r in search.unconverged],
        'critical_points': critical,
        'axiumbilic_count': len(search.records),
        'axiumbilic_index_sum': None if any(i is None for i in indexes)
        else sum(indexes) + 0.0
    }

    family = config.family
    if family.family == 'alpha_eps' and family.eps != 0:
        try:
            report['census'] = count_and_type((family.a, family.eps)).to_dict()
        except BoundaryError as e:
            report['census'] = {'boundary': str(e)}
    elif family.family == 'alpha_a' or \
            (family.family == 'alpha_eps' and family.eps == 0):
        try:
            report['topology'] = lie_cartan_topology(family.a)
        except AxialError as e:
            report['topology'] = None
            report['topology_note'] = str(e)
        try:
            report['resolution'] = resolution_portrait(family.a).to_dict()
        except NonHyperbolicError as e:
            report['resolution'] = None
            report['resolution_note'] = str(e)
    return report


@click.command('analyze')
@run_options
def analyze(family, a, eps, b, expressions, region, grid, threads, solver_par,
            config_file, out):
    """Locate the axiumbilic and critical points of a family and report them.

    The report lists every axiumbilic point with its type, index and
    separatrices, every critical point with the index of the configuration
    around it and, for the alpha families, the local census or the resolution
    of the critical point.
    """
    config = load_run_config(
        'analyze', config_file, solver_par,
        **flag_values(family, a, eps, b, expressions, region, grid, threads, out))
    try:
        report = analyze_report(config)
        write_output(report_json('analyze', report), config.outputs.get('out'))
    except Exception as e:
        _logger.exception('Failed to analyze the axial configuration.\n{}'.format(e))
        sys.exit(1)
    else:
        sys.exit(0)
