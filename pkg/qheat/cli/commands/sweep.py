import click

from qheat.cli.options import physics_options, out_option, emit
from qheat.constants.sweep_variable import SweepVariable
from qheat.experiments.sweeps import run_sweep
from qheat.schemas.run_config import RunConfig
from qheat.utils.csv_format import sweep_csv


@click.command("sweep", help="Uniform sweep of T (both baths), T_R at fixed T_L, or dT at fixed T_a.")
@physics_options
@click.option("--var", "variable", type=click.Choice([v.value for v in SweepVariable]), required=True,
              help="t: common temperature, tr: right temperature, dt: half bias")
@click.option("--lo", type=float, required=True)
@click.option("--hi", type=float, required=True)
@click.option("--n", type=int, default=100, show_default=True, help="grid points, ends included")
@click.option("--tl", "t_left", type=float, default=None, help="fixed left temperature for --var tr")
@click.option("--ta", "t_average", type=float, default=None, help="mean temperature for --var dt")
@out_option
def sweep(**flags) -> int:
    config = RunConfig.from_flags(subcommand="sweep", **flags)
    rows = run_sweep(config.sweep_spec())
    emit(sweep_csv(rows), config.out)
    return 0
