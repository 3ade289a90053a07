import click

from qheat.constants.bath_kind import BathKind
from qheat.core.config import DEFAULT_EPSILON, DEFAULT_KAPPA, DEFAULT_GAMMA

BATH_CHOICES = click.Choice([kind.value for kind in BathKind])

_PHYSICS_OPTIONS = (
    click.option("--epsilon", type=float, default=DEFAULT_EPSILON, show_default=True, help="qubit splitting"),
    click.option("--kappa", type=float, default=DEFAULT_KAPPA, show_default=True, help="XY coupling"),
    click.option("--bath", type=BATH_CHOICES, default=BathKind.BOSON.value, show_default=True,
                 help="reservoir kind (both sides unless --bath-right is given)"),
    click.option("--bath-right", "bath_right", type=BATH_CHOICES, default=None, help="right reservoir kind"),
    click.option("--gl", "gamma_left", type=float, default=DEFAULT_GAMMA, show_default=True, help="left coupling"),
    click.option("--gr", "gamma_right", type=float, default=DEFAULT_GAMMA, show_default=True, help="right coupling"),
)


def physics_options(command):
    for option in reversed(_PHYSICS_OPTIONS):
        command = option(command)
    return command


def out_option(command):
    return click.option("--out", type=str, default=None, help="CSV path, standard output when omitted")(command)


def emit(text: str, out: str | None) -> None:
    """Write the finished CSV in one piece."""
    if out is None:
        click.echo(text, nl=False)
        return
    try:
        with open(out, "w", newline="", encoding="utf-8") as f:
            f.write(text)
    except OSError as ex:
        raise click.FileError(out, hint=ex.strerror) from ex
