import click

from qheat.cli.options import physics_options, out_option, emit
from qheat.experiments.sudden_death import sudden_death_temperature
from qheat.schemas.run_config import RunConfig
from qheat.utils.csv_format import sudden_death_csv


@click.command("death", help="Equilibrium temperature where the concurrence vanishes.")
@physics_options
@out_option
def death(**flags) -> int:
    config = RunConfig.from_flags(subcommand="death", **flags)
    t_death = sudden_death_temperature(config.system_params(),
                                       config.bath,
                                       config.gamma_left,
                                       config.gamma_right,
                                       kind_right=config.bath_right)
    emit(sudden_death_csv(t_death), config.out)
    return 0
