import click

from qheat.cli.options import physics_options, out_option, emit
from qheat.experiments.rectification import rectification_scan
from qheat.schemas.run_config import RunConfig
from qheat.utils.csv_format import rectification_csv


@click.command("rect", help="Heat current under bias dT and under the reversed bias.")
@physics_options
@click.option("--ta", "t_average", type=float, default=1.0, show_default=True, help="mean temperature")
@click.option("--lo", type=float, default=0.05, show_default=True)
@click.option("--hi", type=float, default=0.95, show_default=True)
@click.option("--n", type=int, default=20, show_default=True)
@out_option
def rect(**flags) -> int:
    config = RunConfig.from_flags(subcommand="rect", **flags)
    rows = rectification_scan(config.system_params(),
                              config.bath,
                              config.gamma_left,
                              config.gamma_right,
                              config.t_average,
                              config.delta_grid(),
                              kind_right=config.bath_right)
    emit(rectification_csv(rows), config.out)
    return 0
