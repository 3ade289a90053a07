import click

from qheat.cli.commands.point import point
from qheat.cli.commands.sweep import sweep
from qheat.cli.commands.rect import rect
from qheat.cli.commands.death import death


@click.group(name="qheat", help="Steady-state heat flow and correlations of two qubits between two baths.")
def cli():
    pass


cli.add_command(point)
cli.add_command(sweep)
cli.add_command(rect)
cli.add_command(death)
