import click
from click.testing import CliRunner

import src
from src.main import cli


def test_cli_is_click_group() -> None:
    assert isinstance(cli, click.Group)
    assert {"covol", "mixed-covol", "mult", "mixed-mult", "verify", "random"} <= set(cli.commands)


def test_src_version() -> None:
    assert src.__version__ == "0.0.1"
    result = CliRunner().invoke(cli, ["--version"])
    assert "0.0.1" in result.output
