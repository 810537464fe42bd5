from typing import Optional

import click
from pydantic import ValidationError

from src.api.commands.common import decimal_option, echo_rational, input_error, input_option, load_instance
from src.config.settings.logger_config import logger
from src.geometry.cones_regions import covolume
from src.geometry.mixed_covolume import mixed_covolume
from src.utilities.messages.exceptions.errors import CoconeError
from src.utilities.rationals import parse_rational


@click.command(name="covol")
@input_option
@click.option("--region", required=True, help="Name of the region in the problem file.")
@click.option("--truncation", default=None, help="Truncation level T' (p/q), at least the certificate.")
@decimal_option
def covol(input_path, region: str, truncation: Optional[str], digits: Optional[int]) -> None:
    """
    Print the covolume of a region.
    """
    try:
        instance = load_instance(input_path)
        level = None if truncation is None else parse_rational(truncation)
        value = covolume(instance.region(region), level)
    except (CoconeError, ValidationError, ValueError) as e:
        raise input_error(e) from e
    logger.info(f"covol({region}) = {value}")
    echo_rational(value, digits)


@click.command(name="mixed-covol")
@input_option
@click.option("--region", "regions", multiple=True, required=True, help="Region name; repeat n times.")
@decimal_option
def mixed_covol(input_path, regions: tuple[str, ...], digits: Optional[int]) -> None:
    """
    Print the mixed covolume of n regions.
    """
    try:
        instance = load_instance(input_path)
        value = mixed_covolume([instance.region(name) for name in regions])
    except (CoconeError, ValidationError, ValueError) as e:
        raise input_error(e) from e
    echo_rational(value, digits)
