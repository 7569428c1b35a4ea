"""A collection of helper functions used throughout the CLI.

Most functions assist with loading the run configuration from flags, strings and
files and with the serialization of reports to JSON.
"""
import json
import math

import click
import numpy as np

from ladybug.futil import write_to_file

from ladybug_axial.parameter._base import parse_parameter_string
from ladybug_axial.parameter.family import FamilyParameter, FAMILIES
from ladybug_axial.parameter.region import Region
from ladybug_axial.parameter.solver import SolverParameter
from ladybug_axial.parameter.run import RunConfig

SCHEMA_VERSION = '1.0'


def load_family_par_str(family_par_str):
    """Load a FamilyParameter from a string.

    Args:
        family_par_str: A string of a FamilyParameter to be loaded.
    """
    if family_par_str is not None and family_par_str != '' \
            and family_par_str != 'None':
        return FamilyParameter.from_string(family_par_str)
    return FamilyParameter()


def load_region_par_str(region_par_str):
    """Load a Region from a string.

    Args:
        region_par_str: A string of a Region to be loaded.
    """
    if region_par_str is not None and region_par_str != '' \
            and region_par_str != 'None':
        return Region.from_string(region_par_str)


def load_solver_par_str(solver_par_str):
    """Load the values of a SolverParameter string that are set in the string.

    Args:
        solver_par_str: A string of a SolverParameter to be loaded.

    Returns:
        A dictionary of the solver keys found in the string.
    """
    if solver_par_str is None or solver_par_str == '' or solver_par_str == 'None':
        return {}
    par_dict = parse_parameter_string(solver_par_str)
    values = {}
    for key in SolverParameter.KEYS:
        text = par_dict.get(key.replace('_', '-'))
        if text is not None and text != 'None':
            values[key] = float(text)
    unknown = set(par_dict) - set(k.replace('_', '-') for k in SolverParameter.KEYS)
    assert not unknown, 'Unknown solver parameters. Got {}.'.format(sorted(unknown))
    return values


def load_run_config(command, config_file=None, solver_par=None, **flags):
    """Build the RunConfig of a command.

    Values are taken from the parameter defaults, then from the config file,
    then from the solver parameter string and finally from the explicit flags.
    Invalid values raise a click.UsageError so that the command exits with
    code 2.

    Args:
        command: Name of the command.
        config_file: Optional path to a key = value configuration file.
        solver_par: Optional SolverParameter string.
        flags: The values of the command flags (None when not set).
    """
    try:
        config = RunConfig(command)
        if config_file is not None:
            config = RunConfig.from_file(config_file, config)
            config.command = command
        config = RunConfig.from_values(load_solver_par_str(solver_par), config)
        config = RunConfig.from_values(flags, config)
    except (AssertionError, ValueError, TypeError, KeyError) as e:
        raise click.UsageError('Invalid configuration: {}'.format(e))
    return config


def run_options(func):
    """Add the flags shared by the commands that run on a family."""
    options = [
        click.option('--family', '-fm', help='Name of the surface family.',
                     type=click.Choice(FAMILIES), default=None),
        click.option('--a', 'a', help='The cubic coefficient of the family (or the '
                     'first coefficient of the normal form).', type=float,
                     default=None),
        click.option('--eps', help='The deformation of alpha_eps.', type=float,
                     default=None),
        click.option('--b', 'b', help='The second coefficient of the normal form.',
                     type=float, default=None),
        click.option('--expressions', '-e', help='The 4 polynomial components of a '
                     'user surface separated by commas (eg. "u, u*v, v^2, v^3/3").',
                     type=str, default=None),
        click.option('--region', '-r', help='The chart window as 4 numbers '
                     'u_min u_max v_min v_max. By default, a window suited to the '
                     'family is used.', type=float, nargs=4, default=None),
        click.option('--grid', '-g', help='Number of cells per side of the '
                     'axiumbilic search.', type=int, default=None),
        click.option('--threads', '-t', help='Number of worker threads.', type=int,
                     default=None),
        click.option('--solver-par', '-sp', help='A SolverParameter string to '
                     'customize the solvers (eg. "--samples 1440 --seeds 4").',
                     type=str, default=None),
        click.option('--config', '-c', 'config_file', help='Optional path to a '
                     'key = value configuration file. Flags override its values.',
                     type=click.Path(exists=True, file_okay=True, dir_okay=False,
                                     resolve_path=True), default=None),
        click.option('--out', '-o', help='Optional file to output the report. By '
                     'default, it will be printed to stdout.', type=str,
                     default=None)
    ]
    for option in reversed(options):
        func = option(func)
    return func


def flag_values(family, a, eps, b, expressions, region, grid, threads, out):
    """Get the configuration values of the shared flags."""
    return {
        'family': family, 'a': a, 'eps': eps, 'b': b, 'expressions': expressions,
        'region': list(region) if region else None, 'grid': grid,
        'threads': threads, 'out': out
    }


def json_ready(obj):
    """Convert an object to plain JSON types.

    Numpy values become Python numbers and non-finite floats become None.
    """
    if isinstance(obj, dict):
        return {str(k): json_ready(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [json_ready(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return [json_ready(v) for v in obj.tolist()]
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        value = float(obj)
        return value if math.isfinite(value) else None
    if obj is None or isinstance(obj, str):
        return obj
    return str(obj)


def report_json(command, report):
    """Get the JSON text of a report with its schema version and sorted keys."""
    data = {'schema_version': SCHEMA_VERSION, 'command': command}
    data.update(report)
    return json.dumps(json_ready(data), indent=2, sort_keys=True) + '\n'


def write_output(text, path=None):
    """Write text to a file or print it to stdout when path is None or '-'."""
    if path is None or path == '-':
        click.echo(text, nl=False)
        return None
    return write_to_file(path, text, mkdir=True)
