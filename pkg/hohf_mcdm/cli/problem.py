"""Commands that load a problem file: validate, aggregate and rank."""

from __future__ import annotations

import click

from hohf_mcdm.cli.deps import (
    choice_option,
    emit,
    exit_for,
    format_option,
    get_settings,
    handle_errors,
    resolve,
)
from hohf_mcdm.config import defaults
from hohf_mcdm.models import CombinePolicy, OutputFormat, ValidationMode
from hohf_mcdm.services.choquet import ChoquetError, rank_alternatives
from hohf_mcdm.services.problem_io import ProblemSpec, parse_problem
from hohf_mcdm.services.reporting import (
    aggregation_to_dict,
    render_aggregation_table,
    render_ranking_table,
    render_validation_table,
    render_warnings,
    warnings_to_list,
)

mode_option = choice_option(
    "--mode",
    ValidationMode,
    f"Validation mode (default {defaults.DEFAULT_VALIDATION_MODE}).",
)
policy_option = choice_option(
    "--policy",
    CombinePolicy,
    f"How mixed variants combine (default {defaults.DEFAULT_COMBINE_POLICY}).",
)
problem_argument = click.argument(
    "problem", type=click.Path(exists=True, dir_okay=False)
)


def _load(problem: str, mode: str | None) -> ProblemSpec:
    return parse_problem(problem, mode=mode, options=get_settings().arithmetic)


def _run(spec: ProblemSpec, mode: str | None, policy: str | None, workers: int | None):
    settings = get_settings()
    return rank_alternatives(
        spec.matrix,
        spec.measure,
        resolve(policy, spec.options.policy, CombinePolicy, defaults.DEFAULT_COMBINE_POLICY),
        mode=resolve(mode, spec.options.mode, ValidationMode, defaults.DEFAULT_VALIDATION_MODE),
        options=settings.arithmetic,
        workers=workers or settings.workers,
        reference_scores=spec.reference_scores,
    )


@click.command("validate")
@problem_argument
@mode_option
@format_option
@handle_errors
def validate(problem: str, mode: str | None, output_format: str | None) -> None:
    """Check a problem file; exit 0 clean, 2 with warnings, 1 on errors."""

    spec = _load(problem, mode)
    warnings = spec.all_warnings
    show = not get_settings().no_warn
    payload = {"valid": True}
    if show:
        payload["warnings"] = warnings_to_list(warnings)
    emit(
        resolve(output_format, spec.options.output_format, OutputFormat, defaults.DEFAULT_OUTPUT_FORMAT),
        payload,
        render_validation_table(warnings, include_warnings=show),
    )
    exit_for(warnings)


@click.command("aggregate")
@problem_argument
@click.option("--alternative", "alternatives", multiple=True, help="Limit output to this alternative (repeatable).")
@mode_option
@policy_option
@format_option
@handle_errors
def aggregate(
    problem: str,
    alternatives: tuple[str, ...],
    mode: str | None,
    policy: str | None,
    output_format: str | None,
) -> None:
    """Print sigma, marginal weights, aggregate and score per alternative."""

    spec = _load(problem, mode)
    for label in alternatives:
        if label not in spec.matrix.alternatives:
            raise ChoquetError(
                "UNKNOWN_ALTERNATIVE",
                f"no alternative labelled {label!r}",
                details={"alternative": label},
            )
    report = _run(spec, mode, policy, None)
    warnings = spec.warnings + report.warnings
    show = not get_settings().no_warn

    payload = aggregation_to_dict(report, include_warnings=False)
    if alternatives:
        payload["results"] = [
            result for result in payload["results"] if result["alternative"] in alternatives
        ]
    if show:
        payload["warnings"] = warnings_to_list(warnings)
    emit(
        resolve(output_format, spec.options.output_format, OutputFormat, defaults.DEFAULT_OUTPUT_FORMAT),
        payload,
        render_aggregation_table(
            report, alternatives=alternatives or None, include_warnings=False
        )
        + _warning_block(warnings, show),
    )
    exit_for(warnings)


@click.command("rank")
@problem_argument
@mode_option
@policy_option
@click.option("--workers", type=click.IntRange(min=1), default=None, help="Threads used to evaluate alternatives.")
@format_option
@handle_errors
def rank(
    problem: str,
    mode: str | None,
    policy: str | None,
    workers: int | None,
    output_format: str | None,
) -> None:
    """Aggregate every alternative and print the ranking."""

    spec = _load(problem, mode)
    report = _run(spec, mode, policy, workers)
    warnings = spec.warnings + report.warnings
    show = not get_settings().no_warn

    payload = aggregation_to_dict(report, include_warnings=False)
    if show:
        payload["warnings"] = warnings_to_list(warnings)
    emit(
        resolve(output_format, spec.options.output_format, OutputFormat, defaults.DEFAULT_OUTPUT_FORMAT),
        payload,
        render_ranking_table(report, include_warnings=False) + _warning_block(warnings, show),
    )
    exit_for(warnings)


def _warning_block(warnings, show: bool) -> str:
    if not show or not warnings:
        return ""
    return "\n".join(render_warnings(warnings)) + "\n"
