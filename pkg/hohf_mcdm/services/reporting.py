"""Render reports as aligned text tables or stable JSON documents."""

from __future__ import annotations

import json
from typing import Any, Iterable, Sequence

from hohf_mcdm.config import REPORT_DECIMALS
from hohf_mcdm.models import MeasureClass, ReportWarning
from hohf_mcdm.services.choquet import AggregationReport, AlternativeResult
from hohf_mcdm.services.consensus import TechniqueComparison
from hohf_mcdm.services.fuzzy_measure import FuzzyMeasure
from hohf_mcdm.services.gtype_values import Crisp, GValue, Hfe, IntuPair, Tfn
from hohf_mcdm.services.hohfs_core import HOHFE
from hohf_mcdm.services.problem_io import serialize_gvalue


def fmt(value: float, decimals: int = REPORT_DECIMALS) -> str:
    text = f"{value:.{decimals}f}"
    # keep "-0.0000" out of reports
    return text[1:] if text.startswith("-") and float(text) == 0 else text


def format_gvalue(g: GValue) -> str:
    if isinstance(g, Crisp):
        return fmt(g.m)
    if isinstance(g, Tfn):
        return "(" + ", ".join(fmt(value) for value in g.degrees()) + ")"
    if isinstance(g, Hfe):
        return "{" + ", ".join(fmt(value) for value in g.values) + "}"
    assert isinstance(g, IntuPair)
    return f"<{fmt(g.mu)}, {fmt(g.nu)}>"


def format_hohfe(h: HOHFE) -> str:
    return "{" + ", ".join(format_gvalue(element) for element in h) + "}"


def render_json(payload: Any) -> str:
    """Byte-stable JSON: sorted keys, fixed separators, trailing newline."""

    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def warnings_to_list(warnings: Iterable[ReportWarning]) -> list[dict[str, Any]]:
    return [warning.to_dict() for warning in warnings]


def render_warnings(
    warnings: Sequence[ReportWarning], *, title: str = "Warnings"
) -> list[str]:
    if not warnings:
        return []
    lines = ["", f"{title} ({len(warnings)}):"]
    lines.extend(f"  [{warning.code}] {warning.message}" for warning in warnings)
    return lines


def _table(headers: Sequence[str], rows: Sequence[Sequence[str]]) -> list[str]:
    widths = [
        max(len(str(cell)) for cell in column)
        for column in zip(headers, *rows)
    ]
    lines = ["  ".join(str(cell).ljust(width) for cell, width in zip(headers, widths))]
    lines.append("  ".join("-" * width for width in widths))
    for row in rows:
        lines.append("  ".join(str(cell).ljust(width) for cell, width in zip(row, widths)))
    return [line.rstrip() for line in lines]


def result_to_dict(result: AlternativeResult) -> dict[str, Any]:
    payload = {
        "alternative": result.alternative,
        "sigma": list(result.sigma),
        "weights": list(result.weights),
        "aggregate": [serialize_gvalue(element) for element in result.aggregate],
        "score": result.score,
    }
    if result.reference_score is not None:
        payload["reference_score"] = result.reference_score
        payload["reference_delta"] = result.reference_delta
    return payload


def aggregation_to_dict(
    report: AggregationReport, *, include_warnings: bool = True
) -> dict[str, Any]:
    payload: dict[str, Any] = {
        "criteria": list(report.criteria),
        "results": [result_to_dict(result) for result in report.results],
        "ranking": [list(group) for group in report.ranking],
    }
    if include_warnings:
        payload["warnings"] = warnings_to_list(report.warnings)
    return payload


def render_result_table(result: AlternativeResult) -> list[str]:
    lines = [f"Alternative {result.alternative}"]
    lines.append("  sigma:     " + " > ".join(result.sigma))
    lines.append("  weights:   " + ", ".join(fmt(weight) for weight in result.weights))
    lines.append("  aggregate: " + format_hohfe(result.aggregate))
    lines.append("  score:     " + fmt(result.score))
    if result.reference_score is not None:
        lines.append(
            f"  reference: {fmt(result.reference_score)} "
            f"(delta {fmt(result.reference_delta or 0.0)})"
        )
    return lines


def render_aggregation_table(
    report: AggregationReport,
    *,
    alternatives: Sequence[str] | None = None,
    include_warnings: bool = True,
) -> str:
    """Detailed per-alternative blocks; ``alternatives`` limits the blocks shown."""

    lines: list[str] = []
    for result in report.results:
        if alternatives is not None and result.alternative not in alternatives:
            continue
        if lines:
            lines.append("")
        lines.extend(render_result_table(result))
    if include_warnings:
        lines.extend(render_warnings(report.warnings))
    return "\n".join(lines) + "\n"


def render_ranking_table(
    report: AggregationReport, *, include_warnings: bool = True
) -> str:
    has_reference = any(result.reference_score is not None for result in report.results)
    headers = ["alternative", "sigma", "score"]
    if has_reference:
        headers += ["reference", "delta"]
    rows = []
    for result in report.results:
        row = [result.alternative, " > ".join(result.sigma), fmt(result.score)]
        if has_reference:
            if result.reference_score is None:
                row += ["-", "-"]
            else:
                row += [fmt(result.reference_score), fmt(result.reference_delta or 0.0)]
        rows.append(row)

    lines = _table(headers, rows)
    lines.append("")
    lines.append(
        "Ranking: "
        + " > ".join(
            group[0] if len(group) == 1 else "{" + ", ".join(group) + "}"
            for group in report.ranking
        )
    )
    if include_warnings:
        lines.extend(render_warnings(report.warnings))
    return "\n".join(lines) + "\n"


def comparison_to_dict(
    comparison: TechniqueComparison, *, include_warnings: bool = True
) -> dict[str, Any]:
    payload: dict[str, Any] = {
        "alternatives": list(comparison.alternatives),
        "metric": comparison.metric.value,
        "collective_matrix": comparison.collective.to_lists(),
        "collective_order": list(comparison.collective_order.order),
        "collective_vector": list(comparison.collective_vector.values),
        "techniques": [
            {
                "technique": entry.technique,
                "order": list(entry.order),
                "dominance": list(entry.vector.values),
                "distance": entry.distance,
                "tier": entry.tier,
                "weight": entry.weight,
            }
            for entry in comparison.entries
        ],
        "tiers": [list(tier) for tier in comparison.tiers],
    }
    if include_warnings:
        payload["notes"] = warnings_to_list(comparison.notes)
    return payload


def render_comparison_table(
    comparison: TechniqueComparison, *, include_warnings: bool = True
) -> str:
    labels = comparison.alternatives
    rows = [
        [
            entry.technique,
            " > ".join(entry.order),
            "(" + ",".join(str(value) for value in entry.vector.values) + ")",
            f"{entry.distance:g}",
            str(entry.tier),
            fmt(entry.weight),
        ]
        for entry in comparison.entries
    ]
    lines = _table(["technique", "order", "dominance", "distance", "tier", "weight"], rows)

    lines += ["", "Collective matrix:"]
    matrix_rows = [
        [label] + [str(value) for value in row]
        for label, row in zip(labels, comparison.collective.to_lists())
    ]
    lines.extend("  " + line for line in _table([""] + list(labels), matrix_rows))

    lines.append("")
    lines.append("Collective order: " + " > ".join(comparison.collective_order.order))
    lines.append(
        "Collective dominance: ("
        + ",".join(str(value) for value in comparison.collective_vector.values)
        + ")"
    )
    lines.append(f"Metric: {comparison.metric.value}")
    lines.append(
        "Tiers: "
        + " > ".join("{" + ", ".join(tier) + "}" for tier in comparison.tiers)
    )
    if include_warnings:
        lines.extend(render_warnings(comparison.notes, title="Notes"))
    return "\n".join(lines) + "\n"


def measure_to_dict(
    m: FuzzyMeasure,
    *,
    rho: float | None = None,
    classification: MeasureClass | None = None,
    include_warnings: bool = True,
) -> dict[str, Any]:
    payload: dict[str, Any] = {
        "criteria": [m.label(index) for index in range(m.n)],
        "entries": [
            {"subset": m.subset_labels(mask), "value": value}
            for mask, value in enumerate(m.values)
        ],
        "monotone": m.is_monotone,
        "normalized": m.is_normalized,
    }
    if rho is not None:
        payload["rho"] = rho
    if classification is not None:
        payload["classification"] = classification.value
    if include_warnings:
        payload["warnings"] = warnings_to_list(m.warnings)
    return payload


def render_measure_table(
    m: FuzzyMeasure,
    *,
    rho: float | None = None,
    classification: MeasureClass | None = None,
    include_warnings: bool = True,
) -> str:
    lines: list[str] = []
    if rho is not None:
        lines.append(f"rho: {rho:.12g}")
    if classification is not None:
        lines.append(f"classification: {classification.value}")
    lines.append(f"monotone: {'yes' if m.is_monotone else 'no'}")
    lines.append("")
    rows = [
        ["{" + ", ".join(m.subset_labels(mask)) + "}", fmt(value)]
        for mask, value in enumerate(m.values)
    ]
    lines.extend(_table(["subset", "mu"], rows))
    if include_warnings:
        lines.extend(render_warnings(m.warnings))
    return "\n".join(lines) + "\n"


def render_validation_table(
    warnings: Sequence[ReportWarning], *, include_warnings: bool = True
) -> str:
    status = "OK" if not warnings else f"OK with {len(warnings)} warning(s)"
    lines = [status]
    if include_warnings:
        lines.extend(render_warnings(warnings))
    return "\n".join(lines) + "\n"
