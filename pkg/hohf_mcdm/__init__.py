"""Higher-order hesitant fuzzy decision making with Choquet aggregation."""

import logging

import click

from hohf_mcdm.cli import init_cli
from hohf_mcdm.services.settings import RuntimeSettings


def create_cli() -> click.Group:
    """Command factory for the ``hohf`` tool."""

    settings = RuntimeSettings.load()
    _configure_logging(settings)

    @click.group(name="hohf")
    @click.option("--verbose", is_flag=True, help="Log pipeline progress to stderr.")
    @click.pass_context
    def cli(ctx: click.Context, verbose: bool) -> None:
        """Aggregate HOHF decision matrices and compare technique rankings."""

        ctx.ensure_object(dict)
        ctx.obj["settings"] = settings
        if verbose:
            logging.getLogger().setLevel(logging.INFO)

    init_cli(cli)
    return cli


def _configure_logging(settings: RuntimeSettings) -> None:
    """Send log records to stderr at the configured level."""

    logging.basicConfig(
        level=settings.log_level,
        format="%(levelname)s %(name)s: %(message)s",
    )
    logging.getLogger().setLevel(settings.log_level)
