import click

import src
from src.api.endpoints import commands as command_registry
from src.config.settings.logger_config import logger


def initialize_cli() -> click.Group:
    @click.group(name="cocone")
    @click.version_option(version=src.__version__, prog_name="cocone")
    def app() -> None:
        """
        Exact covolumes of C-convex regions and multiplicities of monomial ideals.
        """
        logger.debug("cocone invoked")

    for command in command_registry:
        app.add_command(command)
    return app


cli: click.Group = initialize_cli()


if __name__ == "__main__":
    cli()
