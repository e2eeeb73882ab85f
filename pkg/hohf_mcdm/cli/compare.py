"""The technique comparison command."""

from __future__ import annotations

import click

from hohf_mcdm.cli.deps import (
    EXIT_OK,
    choice_option,
    emit,
    format_option,
    get_settings,
    handle_errors,
    resolve,
)
from hohf_mcdm.config import defaults
from hohf_mcdm.models import DistanceMetric, OutputFormat
from hohf_mcdm.services.consensus import sort_techniques
from hohf_mcdm.services.problem_io import parse_rankings
from hohf_mcdm.services.reporting import comparison_to_dict, render_comparison_table


@click.command("compare")
@click.argument("rankings", type=click.Path(exists=True, dir_okay=False))
@choice_option(
    "--metric",
    DistanceMetric,
    f"Distance between dominance vectors (default {defaults.DEFAULT_DISTANCE_METRIC}).",
)
@click.option(
    "--use-printed-vectors",
    is_flag=True,
    help="Measure distances with the dominance vectors given in the file.",
)
@format_option
@handle_errors
def compare(
    rankings: str,
    metric: str | None,
    use_printed_vectors: bool,
    output_format: str | None,
) -> None:
    """Sort techniques by distance from the collective preference."""

    comparison = sort_techniques(
        parse_rankings(rankings),
        metric=resolve(metric, None, DistanceMetric, defaults.DEFAULT_DISTANCE_METRIC),
        use_printed_vectors=use_printed_vectors,
    )
    show = not get_settings().no_warn
    emit(
        resolve(output_format, None, OutputFormat, defaults.DEFAULT_OUTPUT_FORMAT),
        comparison_to_dict(comparison, include_warnings=show),
        render_comparison_table(comparison, include_warnings=show),
    )
    # mismatch notes describe the input file, not a lenient computation
    click.get_current_context().exit(EXIT_OK)
