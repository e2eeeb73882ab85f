"""Shared helpers for command handlers."""

from __future__ import annotations

import functools
import logging
from typing import Any, Callable, Sequence

import click

from hohf_mcdm.config import defaults
from hohf_mcdm.models import OutputFormat, ReportWarning
from hohf_mcdm.services.errors import HOHFError
from hohf_mcdm.services.problem_io import load_json, problem_options
from hohf_mcdm.services.reporting import render_json
from hohf_mcdm.services.settings import RuntimeSettings

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_WARNINGS = 2


def choice_option(name: str, enum_cls, help_text: str) -> Callable:
    """A ``--name`` option restricted to ``enum_cls`` values, unset by default."""

    return click.option(
        name,
        type=click.Choice(sorted(enum_cls.values()), case_sensitive=False),
        default=None,
        help=help_text,
    )


format_option = click.option(
    "--format",
    "output_format",
    type=click.Choice(sorted(OutputFormat.values()), case_sensitive=False),
    default=None,
    help=f"Output format (default {defaults.DEFAULT_OUTPUT_FORMAT}).",
)


def get_settings() -> RuntimeSettings:
    """Return the settings attached to the current click context."""

    ctx = click.get_current_context()
    settings = (ctx.find_root().obj or {}).get("settings")
    if settings is None:
        raise RuntimeError("runtime settings not configured")
    return settings


def resolve(cli_value: Any, file_value: Any, enum_cls, default: str):
    """Command line beats the problem file, which beats the built-in default."""

    if cli_value is not None:
        return enum_cls.parse(cli_value)
    if file_value is not None:
        return file_value
    return enum_cls.parse(default)


def emit(output_format: OutputFormat, payload: dict[str, Any], table: str) -> None:
    if output_format is OutputFormat.JSON:
        click.echo(render_json(payload), nl=False)
    else:
        click.echo(table, nl=False)


def exit_for(warnings: Sequence[ReportWarning]) -> None:
    """Exit 2 when warnings were produced; hiding them does not change this."""

    ctx = click.get_current_context()
    ctx.exit(EXIT_WARNINGS if warnings else EXIT_OK)


def handle_errors(command: Callable) -> Callable:
    """Turn pipeline errors into a structured message on stderr and exit 1."""

    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except HOHFError as exc:
            logger.debug("command failed", exc_info=True)
            if _error_format(kwargs) is OutputFormat.JSON:
                click.echo(render_json({"error": exc.to_dict()}), err=True, nl=False)
            else:
                click.echo(f"error [{exc.code}]: {exc.message}", err=True)
                if exc.details:
                    click.echo(f"  details: {render_json(exc.details).strip()}", err=True)
            click.get_current_context().exit(EXIT_ERROR)

    return wrapper


def _error_format(kwargs: dict[str, Any]) -> OutputFormat:
    # the problem file may ask for json even when --format is absent
    file_format = None
    problem = kwargs.get("problem")
    if kwargs.get("output_format") is None and problem is not None:
        try:
            file_format = problem_options(load_json(problem)).output_format
        except HOHFError:
            pass
    return resolve(
        kwargs.get("output_format"), file_format, OutputFormat, defaults.DEFAULT_OUTPUT_FORMAT
    )
