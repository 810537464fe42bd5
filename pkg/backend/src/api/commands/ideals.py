import json
from typing import Optional

import click
from pydantic import ValidationError

from src.algebra.monomial_ideals import (
    colength as ideal_colength,
    hilbert_samuel as hilbert_samuel_table,
    ideals_equivalent,
    integral_closure,
    mixed_multiplicity,
    samuel_multiplicity,
)
from src.api.commands.common import decimal_option, echo_rational, input_error, input_option, load_instance
from src.utilities.messages.exceptions.errors import CoconeError

ideal_option = click.option("--ideal", required=True, help="Name of the ideal in the problem file.")


@click.command(name="colength")
@input_option
@ideal_option
def colength(input_path, ideal: str) -> None:
    """
    Print dim k[S]/I.
    """
    try:
        value = ideal_colength(load_instance(input_path).ideal(ideal))
    except (CoconeError, ValidationError, ValueError) as e:
        raise input_error(e) from e
    click.echo(value)


@click.command(name="hilbert-samuel")
@input_option
@ideal_option
@click.option("--k-max", type=click.IntRange(min=1), default=5, show_default=True, help="Largest power k.")
def hilbert_samuel(input_path, ideal: str, k_max: int) -> None:
    """
    Print ``k H_I(k)`` for k = 1..k_max, one pair per line.
    """
    try:
        table = hilbert_samuel_table(load_instance(input_path).ideal(ideal), k_max)
    except (CoconeError, ValidationError, ValueError) as e:
        raise input_error(e) from e
    for k, value in table.entries:
        click.echo(f"{k}\t{value}")


@click.command(name="mult")
@input_option
@ideal_option
@decimal_option
def mult(input_path, ideal: str, digits: Optional[int]) -> None:
    """
    Print the Samuel multiplicity e(I).
    """
    try:
        value = samuel_multiplicity(load_instance(input_path).ideal(ideal))
    except (CoconeError, ValidationError, ValueError) as e:
        raise input_error(e) from e
    echo_rational(value, digits)


@click.command(name="mixed-mult")
@input_option
@click.option("--ideal", "ideals", multiple=True, required=True, help="Ideal name; repeat n times.")
@decimal_option
def mixed_mult(input_path, ideals: tuple[str, ...], digits: Optional[int]) -> None:
    """
    Print the mixed multiplicity e(I1, ..., In).
    """
    try:
        instance = load_instance(input_path)
        value = mixed_multiplicity([instance.ideal(name) for name in ideals])
    except (CoconeError, ValidationError, ValueError) as e:
        raise input_error(e) from e
    echo_rational(value, digits)


@click.command(name="closure")
@input_option
@ideal_option
def closure(input_path, ideal: str) -> None:
    """
    Print the minimal generators of the integral closure as a JSON list.
    """
    try:
        closed = integral_closure(load_instance(input_path).ideal(ideal))
    except (CoconeError, ValidationError, ValueError) as e:
        raise input_error(e) from e
    click.echo(json.dumps([list(g) for g in closed.generators]))


@click.command(name="equiv")
@input_option
@click.argument("first")
@click.argument("second")
def equiv(input_path, first: str, second: str) -> None:
    """
    Print whether the ideals FIRST and SECOND are equivalent.
    """
    try:
        instance = load_instance(input_path)
        value = ideals_equivalent(instance.ideal(first), instance.ideal(second))
    except (CoconeError, ValidationError, ValueError) as e:
        raise input_error(e) from e
    click.echo("true" if value else "false")
