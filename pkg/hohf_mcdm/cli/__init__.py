"""Command-line wiring for the HOHF decision toolkit."""

import click

from .compare import compare
from .measure import group as measure_group
from .problem import aggregate, rank, validate


def init_cli(cli: click.Group) -> None:
    """Register all commands on the given root group."""

    cli.add_command(validate)
    cli.add_command(aggregate)
    cli.add_command(rank)
    cli.add_command(compare)
    cli.add_command(measure_group)
