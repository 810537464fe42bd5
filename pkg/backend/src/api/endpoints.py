import click

from src.api.commands.geometry import covol, mixed_covol
from src.api.commands.ideals import closure, colength, equiv, hilbert_samuel, mixed_mult, mult
from src.api.commands.random import random_problem
from src.api.commands.verify import verify

commands: list[click.Command] = [
    covol,
    mixed_covol,
    colength,
    hilbert_samuel,
    mult,
    mixed_mult,
    closure,
    equiv,
    verify,
    random_problem,
]
