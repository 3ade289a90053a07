import logging
from typing import Sequence

import click
from pydantic import ValidationError
from rich.console import Console
from rich.logging import RichHandler

from qheat.cli.cli import cli
from qheat.core.config import LOG_LEVEL
from qheat.core.exceptions import SimulationError
from qheat.schemas.run_config import flag_error


def configure_logging(level: str = LOG_LEVEL) -> None:
    # diagnostics go to stderr, stdout carries only CSV
    logging.basicConfig(level=level,
                        format="%(message)s",
                        datefmt="[%X]",
                        handlers=[RichHandler(console=Console(stderr=True), show_path=False)])


def main(argv: Sequence[str] | None = None) -> int:
    configure_logging()
    try:
        result = cli.main(args=list(argv) if argv is not None else None, prog_name="qheat", standalone_mode=False)
    except click.ClickException as ex:
        ex.show()
        return ex.exit_code
    except click.exceptions.Abort:
        click.echo("Aborted!", err=True)
        return 1
    except SimulationError as ex:
        click.echo(f"error: {ex.detail}", err=True)
        return ex.exit_code
    except ValidationError as ex:
        error = flag_error(ex)
        click.echo(f"error: {error.detail}", err=True)
        return error.exit_code

    return result if isinstance(result, int) else 0
