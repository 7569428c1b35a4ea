"""ladybug-axial commands."""
import click

from ladybug.cli import main
from .forms import forms
from .analyze import analyze
from .portrait import portrait
from .scan import scan
from .verify import verify


# command group for all axial extension commands.
@click.group(help='ladybug axial curvature commands.')
@click.version_option()
def axial():
    pass


# add commands for axial
axial.add_command(forms)
axial.add_command(analyze)
axial.add_command(portrait)
axial.add_command(scan)
axial.add_command(verify)


# add axial sub-group to ladybug CLI
main.add_command(axial)
