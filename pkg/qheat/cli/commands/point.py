import click

from qheat.cli.options import physics_options, out_option, emit
from qheat.experiments.sweeps import evaluate_point
from qheat.schemas.run_config import RunConfig
from qheat.utils.csv_format import sweep_csv


@click.command("point", help="Steady state at one pair of bath temperatures.")
@physics_options
@click.option("--tl", "t_left", type=float, required=True, help="left temperature")
@click.option("--tr", "t_right", type=float, required=True, help="right temperature")
@out_option
def point(**flags) -> int:
    config = RunConfig.from_flags(subcommand="point", **flags)
    row = evaluate_point(config.system_params(),
                         config.left_bath(config.t_left),
                         config.right_bath(config.t_right))
    emit(sweep_csv([row]), config.out)
    return 0
