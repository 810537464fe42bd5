"""
``verify`` subcommands: run one check over a range of seeds and print a JSON report per instance.
"""

import click
from pydantic import ValidationError

from src.api.commands.common import input_error
from src.config.settings.logger_config import logger
from src.models.schemas.verification import InstanceSpec
from src.utilities.messages.exceptions.cli.exc_details import CHECK_FAILED_EXIT_CODE
from src.utilities.messages.exceptions.errors import CoconeError
from src.verification.checks import CHECKS, run_batch
from src.verification.instances import instance_problem_file


def instance_options(function):
    """
    Options describing generated instances, shared by ``verify`` and ``random``.
    """
    options = [
        click.option("--dim", "dimension", type=click.IntRange(2, 4), default=2, show_default=True),
        click.option("--rays", "ray_count", type=click.IntRange(min=1), default=None, help="Defaults to dim + 1."),
        click.option("--generators", "generator_count", type=click.IntRange(min=0), default=2, show_default=True),
        click.option("--bound", "coordinate_bound", type=click.IntRange(min=1), default=6, show_default=True),
        click.option("--ideals", "ideal_count", type=click.IntRange(min=1), default=None, help="Defaults to dim + 1."),
    ]
    for option in reversed(options):
        function = option(function)
    return function


def build_spec(seed: int, **options) -> InstanceSpec:
    try:
        return InstanceSpec(seed=seed, **options)
    except ValidationError as e:
        raise input_error(e) from e


def _verify_command(check_name: str) -> click.Command:
    @click.command(name=check_name, help=f"Run the '{check_name}' check on COUNT seeded instances.")
    @click.option("--seed", type=click.IntRange(min=0), default=0, show_default=True, help="First seed.")
    @click.option("--count", type=click.IntRange(min=1), default=1, show_default=True)
    @click.option("--jobs", type=click.IntRange(min=1), default=1, show_default=True, help="Worker processes.")
    @instance_options
    @click.pass_context
    def command(ctx: click.Context, seed: int, count: int, jobs: int, **options) -> None:
        specs = [build_spec(seed + offset, **options) for offset in range(count)]
        reports = run_batch(check_name, specs, jobs)
        failures = 0
        for report in reports:
            click.echo(report.model_dump_json())
            if not report.holds:
                failures += 1
                click.echo(f"FAILED {check_name}: {report.model_dump_json()}", err=True)
                try:
                    click.echo(instance_problem_file(report.instance).model_dump_json(indent=2), err=True)
                except CoconeError as e:
                    click.echo(f"instance could not be regenerated: {e}", err=True)
        logger.info(f"verify {check_name}: {len(reports) - failures}/{len(reports)} instances hold")
        if failures:
            ctx.exit(CHECK_FAILED_EXIT_CODE)

    return command


@click.group(name="verify")
def verify() -> None:
    """
    Check the covolume and multiplicity identities on seeded random instances.
    """


for _name in CHECKS:
    verify.add_command(_verify_command(_name))
