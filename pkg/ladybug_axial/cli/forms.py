"""Report the local geometry of a surface at one point of its chart."""
import click
import sys
import logging

from ladybug_axial.errors import CriticalPointError
from ladybug_axial.forms import first_form, normal_frame, second_form_scaled, \
    ellipse_of_curvature
from ladybug_axial.quartic import quartic_extended, quartic_regular, \
    check_long_form, surface_directions

from ._helper import load_run_config, report_json, write_output

_logger = logging.getLogger(__name__)


def forms_report(config, point):
    """Get the jet, forms, frame, ellipse and quartics of a surface at a point."""
    surface = config.family.surface()
    u, v = point
    jet = surface.jet(u, v)
    forms = first_form(jet)
    frame = normal_frame(jet)
    sff = second_form_scaled(jet, frame)
    extended = quartic_extended(forms, sff, frame, (u, v))
    report = {
        'config': config.to_dict(),
        'point': [u, v],
        'jet': jet.to_dict(),
        'first_form': forms.to_dict(),
        'frame': frame.to_dict(),
        'second_form': sff.to_dict(),
        'extended_quartic': extended.to_dict(),
        'critical': forms.is_critical()
    }
    try:
        regular = quartic_regular(forms, sff, (u, v))
        report['regular_quartic'] = regular.to_dict()
        report['polynomial_form'] = list(regular.polynomial_form())
        report['long_form_gap'] = check_long_form(forms, sff)
        report['ellipse'] = ellipse_of_curvature(jet, frame, forms, sff).to_dict()
        report['directions'] = surface_directions(surface, u, v).to_dict()
    except CriticalPointError as e:
        _logger.info('Regular quantities skipped at %s: %s', point, e)
        for key in ('regular_quartic', 'polynomial_form', 'long_form_gap',
                    'ellipse', 'directions'):
            report[key] = None
        report['note'] = str(e)
    return report


@click.command('forms')
@click.option('--point', '-p', help='The (u, v) point as 2 numbers.', type=float,
              nargs=2, required=True)
@click.option('--family', '-fm', help='Name of the surface family. The normal form '
              'has no surface and is not accepted.',
              type=click.Choice(('alpha_a', 'alpha_eps', 'whitney', 'user')),
              default=None)
@click.option('--a', 'a', help='The cubic coefficient of the family.', type=float,
              default=None)
@click.option('--eps', help='The deformation of alpha_eps.', type=float,
              default=None)
@click.option('--expressions', '-e', help='The 4 polynomial components of a user '
              'surface separated by commas (eg. "u, u*v, v^2, v^3/3").', type=str,
              default=None)
@click.option('--config', '-c', 'config_file', help='Optional path to a key = value '
              'configuration file. Flags override its values.',
              type=click.Path(exists=True, file_okay=True, dir_okay=False,
                              resolve_path=True), default=None)
@click.option('--out', '-o', help='Optional file to output the report. By default, '
              'it will be printed to stdout.', type=str, default=None)
def forms(point, family, a, eps, expressions, config_file, out):
    """Report the local geometry of a surface at a point.

    The report has the jet, the fundamental forms, the normal frame, the ellipse
    of curvature and the regular and extended axial quartics.
    """
    config = load_run_config('forms', config_file, None, family=family, a=a,
                             eps=eps, expressions=expressions, out=out)
    if config.family.family == 'normal_form':
        raise click.UsageError('The forms command needs a surface family.')
    try:
        report = forms_report(config, tuple(point))
        write_output(report_json('forms', report), config.outputs.get('out'))
    except Exception as e:
        _logger.exception('Failed to compute the forms.\n{}'.format(e))
        sys.exit(1)
    else:
        sys.exit(0)
