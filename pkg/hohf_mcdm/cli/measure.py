"""Fuzzy measure utilities: solve the rho normalization and classify."""

from __future__ import annotations

import click

from hohf_mcdm.cli.deps import (
    emit,
    exit_for,
    format_option,
    get_settings,
    handle_errors,
    resolve,
)
from hohf_mcdm.cli.problem import mode_option, problem_argument
from hohf_mcdm.config import defaults
from hohf_mcdm.models import OutputFormat, RhoSign
from hohf_mcdm.services.fuzzy_measure import (
    FuzzyMeasureError,
    measure_classify,
    measure_rho_rule,
    measure_solve_rho,
)
from hohf_mcdm.services.problem_io import parse_problem
from hohf_mcdm.services.reporting import measure_to_dict, render_measure_table

group = click.Group("measure", help="Inspect and generate fuzzy measures.")


def _parse_floats(raw: str) -> tuple[float, ...]:
    try:
        return tuple(float(part) for part in raw.split(",") if part.strip())
    except ValueError as exc:
        raise FuzzyMeasureError(
            "VALUE_OUT_OF_RANGE",
            f"cannot read singleton weights from {raw!r}",
            details={"singletons": raw},
        ) from exc


@group.command("solve-rho")
@click.option(
    "--singletons",
    required=True,
    help="Comma-separated singleton weights, e.g. 0.2,0.3,0.4.",
)
@click.option(
    "--labels",
    default=None,
    help="Comma-separated criterion labels (default x1..xn).",
)
@click.option(
    "--sign",
    type=click.Choice(sorted(RhoSign.values()), case_sensitive=False),
    default=None,
    help="Sign of the interaction term (default from HOHF_RHO_SIGN, else minus).",
)
@format_option
@handle_errors
def solve_rho(
    singletons: str,
    labels: str | None,
    sign: str | None,
    output_format: str | None,
) -> None:
    """Find the normalizing rho and print the generated measure."""

    weights = _parse_floats(singletons)
    names = tuple(part.strip() for part in labels.split(",")) if labels else ()
    rho_sign = RhoSign.parse(sign) if sign else get_settings().arithmetic.rho_sign
    rho = measure_solve_rho(weights, sign=rho_sign)
    measure = measure_rho_rule(weights, rho, sign=rho_sign, labels=names)
    show = not get_settings().no_warn
    classification = measure_classify(measure)
    emit(
        resolve(output_format, None, OutputFormat, defaults.DEFAULT_OUTPUT_FORMAT),
        measure_to_dict(
            measure, rho=rho, classification=classification, include_warnings=show
        ),
        render_measure_table(
            measure, rho=rho, classification=classification, include_warnings=show
        ),
    )
    exit_for(measure.warnings)


@group.command("classify")
@problem_argument
@mode_option
@format_option
@handle_errors
def classify(problem: str, mode: str | None, output_format: str | None) -> None:
    """Classify a problem's measure and list its monotonicity violations."""

    spec = parse_problem(problem, mode=mode, options=get_settings().arithmetic)
    measure = spec.measure
    show = not get_settings().no_warn
    classification = measure_classify(measure)
    emit(
        resolve(output_format, spec.options.output_format, OutputFormat, defaults.DEFAULT_OUTPUT_FORMAT),
        measure_to_dict(measure, classification=classification, include_warnings=show),
        render_measure_table(
            measure, classification=classification, include_warnings=show
        ),
    )
    exit_for(measure.warnings)
