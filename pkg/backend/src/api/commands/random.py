import click

from src.api.commands.common import input_error
from src.api.commands.verify import build_spec, instance_options
from src.utilities.messages.exceptions.errors import CoconeError
from src.verification.instances import instance_problem_file


@click.command(name="random")
@click.option("--seed", type=click.IntRange(min=0), required=True)
@instance_options
def random_problem(seed: int, **options) -> None:
    """
    Print the problem file of a seeded random instance.
    """
    spec = build_spec(seed, **options)
    try:
        problem = instance_problem_file(spec)
    except CoconeError as e:
        raise input_error(e) from e
    click.echo(problem.model_dump_json(indent=2))
