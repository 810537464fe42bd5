"""
Options and helpers shared by the command modules.
"""

from fractions import Fraction
from pathlib import Path
from typing import Optional, Union

import click
from pydantic import ValidationError

from src.config.settings.logger_config import logger
from src.repository.problem_files import ProblemInstance, load_problem_file
from src.utilities.messages.exceptions.cli.exc_details import InputError
from src.utilities.messages.exceptions.errors import CoconeError
from src.utilities.rationals import format_rational, render_decimal

input_option = click.option(
    "--input",
    "input_path",
    required=True,
    type=click.Path(dir_okay=False, path_type=Path),
    help="Problem file (JSON) holding the cone, regions and ideals.",
)
decimal_option = click.option(
    "--decimal",
    "digits",
    type=click.IntRange(min=1),
    default=None,
    metavar="DIGITS",
    help="Also print a decimal rendering with DIGITS significant digits.",
)


def load_instance(input_path: Path) -> ProblemInstance:
    return ProblemInstance(load_problem_file(input_path))


def input_error(error: Union[CoconeError, ValidationError, ValueError]) -> InputError:
    """
    Turn a rejected input into a click error that exits with status 2.

    Validation errors are flattened to ``field.path: message`` entries so the offending
    field of the problem file is named.
    """
    if isinstance(error, ValidationError):
        entries = []
        for detail in error.errors():
            location = ".".join(str(part) for part in detail["loc"]) or "<root>"
            entries.append(f"{location}: {detail['msg']}")
        message = "; ".join(entries)
    else:
        message = str(error)
    logger.warning(f"Rejected input: {message}")
    return InputError(message)


def echo_rational(value: Union[Fraction, int], digits: Optional[int]) -> None:
    text = format_rational(Fraction(value))
    if digits is not None:
        text = f"{text}\t{render_decimal(Fraction(value), digits)}"
    click.echo(text)
