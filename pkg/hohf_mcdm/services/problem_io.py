"""Problem and rankings files: JSON parsing, validation and serialization."""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from json import JSONDecodeError
from pathlib import Path
from typing import Any, Mapping

from hohf_mcdm.models import (
    CombinePolicy,
    DistanceMetric,
    OutputFormat,
    ReportWarning,
    ValidationMode,
)
from hohf_mcdm.services.consensus import RankingOrder
from hohf_mcdm.services.errors import HOHFError
from hohf_mcdm.services.fuzzy_measure import (
    FuzzyMeasure,
    mask_of,
    measure_from_table,
    measure_rho_rule,
    measure_solve_rho,
)
from hohf_mcdm.services.gtype_values import (
    Crisp,
    GValue,
    Hfe,
    IntuPair,
    Tfn,
    gv_validate,
)
from hohf_mcdm.services.hohfs_core import HOHFE, DecisionMatrix
from hohf_mcdm.services.settings import DEFAULT_ARITHMETIC, ArithmeticOptions

logger = logging.getLogger(__name__)

_LENIENT_WARNING_CODES = {
    "OUT_OF_RANGE": "DEGREE_OUT_OF_UNIT_RANGE",
    "MU_NU_SUM_EXCEEDS_ONE": "MU_NU_SUM_EXCEEDS_ONE",
    "CORNERS_NOT_SORTED": "CORNERS_DESCENDING",
}


class ProblemFileError(HOHFError):
    """Raised when a problem or rankings file cannot be loaded."""


@dataclass(frozen=True, slots=True)
class ProblemOptions:
    """Options stored in a problem file; ``None`` means not set there."""

    mode: ValidationMode | None = None
    policy: CombinePolicy | None = None
    metric: DistanceMetric | None = None
    output_format: OutputFormat | None = None

    def to_dict(self) -> dict[str, str]:
        pairs = {
            "mode": self.mode,
            "policy": self.policy,
            "metric": self.metric,
            "format": self.output_format,
        }
        return {key: value.value for key, value in pairs.items() if value is not None}


@dataclass(frozen=True, slots=True)
class RhoRuleSource:
    """Singleton weights a measure was generated from; ``rho`` None means solved."""

    singletons: tuple[float, ...]
    rho: float | None = None


@dataclass(frozen=True, slots=True)
class ProblemSpec:
    matrix: DecisionMatrix
    measure: FuzzyMeasure
    options: ProblemOptions = field(default_factory=ProblemOptions)
    rho_rule: RhoRuleSource | None = None
    reference_scores: Mapping[str, float] = field(default_factory=dict)
    warnings: tuple[ReportWarning, ...] = field(default=(), compare=False)

    @property
    def all_warnings(self) -> tuple[ReportWarning, ...]:
        """Cell warnings followed by the measure's own warnings."""
        return self.warnings + self.measure.warnings


def load_json(path: str | Path) -> Any:
    source = Path(path)
    try:
        text = source.read_text(encoding="utf-8")
    except OSError as exc:
        raise ProblemFileError(
            "PARSE_ERROR",
            f"cannot read {source}",
            details={"path": str(source)},
        ) from exc
    return parse_json_text(text, source=str(source))


def parse_json_text(text: str, *, source: str = "<string>") -> Any:
    try:
        return json.loads(text)
    except JSONDecodeError as exc:
        raise ProblemFileError(
            "PARSE_ERROR",
            f"{source}:{exc.lineno}:{exc.colno}: {exc.msg}",
            details={"path": source, "line": exc.lineno, "column": exc.colno},
        ) from exc


def parse_problem(
    path: str | Path,
    *,
    mode: ValidationMode | str | None = None,
    options: ArithmeticOptions = DEFAULT_ARITHMETIC,
) -> ProblemSpec:
    """Load and validate a problem file.

    ``mode`` overrides the file's own validation mode when given.
    """

    spec = problem_from_dict(load_json(path), mode=mode, options=options)
    logger.info(
        "loaded problem",
        extra={
            "path": str(path),
            "alternatives": len(spec.matrix.alternatives),
            "criteria": len(spec.matrix.criteria),
            "warning_count": len(spec.all_warnings),
        },
    )
    return spec


def problem_from_dict(
    payload: Any,
    *,
    mode: ValidationMode | str | None = None,
    options: ArithmeticOptions = DEFAULT_ARITHMETIC,
) -> ProblemSpec:
    if not isinstance(payload, dict):
        raise ProblemFileError("SCHEMA_ERROR", "problem file must hold a JSON object")

    file_options = problem_options(payload)
    effective_mode = (
        ValidationMode.parse(mode)
        if mode is not None
        else file_options.mode or ValidationMode.LENIENT
    )

    alternatives = _labels(payload, "alternatives")
    criteria = _labels(payload, "criteria")
    rows = payload.get("matrix")
    if not isinstance(rows, list) or not rows:
        raise ProblemFileError(
            "SCHEMA_ERROR", "'matrix' must be a nonempty list of rows"
        )
    if len(rows) != len(alternatives):
        raise ProblemFileError(
            "SCHEMA_ERROR",
            "'matrix' needs one row per alternative",
            details={"rows": len(rows), "alternatives": len(alternatives)},
        )

    warnings: list[ReportWarning] = []
    cells: list[tuple[HOHFE, ...]] = []
    for alternative, row in zip(alternatives, rows):
        if not isinstance(row, list) or len(row) != len(criteria):
            raise ProblemFileError(
                "SCHEMA_ERROR",
                f"row {alternative!r} needs one cell per criterion",
                details={"alternative": alternative, "criteria": len(criteria)},
            )
        parsed_row = []
        for criterion, cell in zip(criteria, row):
            subject = {"alternative": alternative, "criterion": criterion}
            parsed_row.append(_parse_cell(cell, subject, effective_mode, warnings))
        cells.append(tuple(parsed_row))

    try:
        matrix = DecisionMatrix(alternatives, criteria, tuple(cells))
        measure, rho_rule = _parse_measure(
            payload.get("measure"), criteria, effective_mode, options
        )
    except ProblemFileError:
        raise
    except HOHFError as exc:
        raise ProblemFileError(
            "VALIDATION_ERROR",
            exc.message,
            details={"cause": exc.to_dict()},
        ) from exc

    return ProblemSpec(
        matrix=matrix,
        measure=measure,
        options=file_options,
        rho_rule=rho_rule,
        reference_scores=_parse_reference_scores(
            payload.get("reference_scores", {}), alternatives
        ),
        warnings=tuple(warnings),
    )


def _labels(payload: dict, key: str) -> tuple[str, ...]:
    labels = payload.get(key)
    if not isinstance(labels, list) or not labels:
        raise ProblemFileError("SCHEMA_ERROR", f"{key!r} must be a nonempty list")
    if not all(isinstance(label, str) and label for label in labels):
        raise ProblemFileError(
            "SCHEMA_ERROR", f"{key!r} must contain nonempty strings"
        )
    if len(set(labels)) != len(labels):
        raise ProblemFileError(
            "SCHEMA_ERROR",
            f"{key!r} contains duplicate labels",
            details={key: labels},
        )
    return tuple(labels)


def problem_options(payload: Any) -> ProblemOptions:
    """Read only the options block of a problem payload."""

    if not isinstance(payload, dict):
        raise ProblemFileError("SCHEMA_ERROR", "problem file must hold a JSON object")
    return _parse_options(payload.get("options", {}))


def _parse_options(raw: Any) -> ProblemOptions:
    if not isinstance(raw, dict):
        raise ProblemFileError("SCHEMA_ERROR", "'options' must be an object")
    known = {
        "mode": ValidationMode,
        "policy": CombinePolicy,
        "metric": DistanceMetric,
        "format": OutputFormat,
    }
    unknown = sorted(set(raw) - set(known))
    if unknown:
        raise ProblemFileError(
            "SCHEMA_ERROR",
            "unknown option(s)",
            details={"options": unknown},
        )
    parsed: dict[str, Any] = {}
    for key, enum_cls in known.items():
        if key not in raw:
            continue
        try:
            parsed[key] = enum_cls.parse(raw[key])
        except ValueError as exc:
            raise ProblemFileError(
                "SCHEMA_ERROR", str(exc), details={"option": key}
            ) from exc
    return ProblemOptions(
        mode=parsed.get("mode"),
        policy=parsed.get("policy"),
        metric=parsed.get("metric"),
        output_format=parsed.get("format"),
    )


def _numbers(raw: Any, subject: dict[str, Any], size: int | None = None) -> list[float]:
    if not isinstance(raw, list) or not all(
        isinstance(value, (int, float)) and not isinstance(value, bool) for value in raw
    ):
        raise ProblemFileError(
            "SCHEMA_ERROR", "expected a list of numbers", details=subject
        )
    if size is not None and len(raw) != size:
        raise ProblemFileError(
            "SCHEMA_ERROR",
            f"expected exactly {size} numbers",
            details={**subject, "got": len(raw)},
        )
    return [float(value) for value in raw]


def parse_gvalue(raw: Any, subject: dict[str, Any]) -> GValue:
    """Decode one tagged value such as ``{"tfn": [0.1, 0.2, 0.3]}``."""

    if not isinstance(raw, dict) or len(raw) != 1:
        raise ProblemFileError(
            "SCHEMA_ERROR",
            "each value must be an object with a single variant tag",
            details=subject,
        )
    tag, body = next(iter(raw.items()))
    try:
        if tag == "crisp":
            if isinstance(body, bool) or not isinstance(body, (int, float)):
                raise ProblemFileError(
                    "SCHEMA_ERROR", "crisp degree must be a number", details=subject
                )
            return Crisp(float(body))
        if tag == "tfn":
            return Tfn(*_numbers(body, subject, 3))
        if tag == "interval":
            return Tfn.from_interval(*_numbers(body, subject, 2))
        if tag == "hfe":
            return Hfe(tuple(_numbers(body, subject)))
        if tag == "ifs":
            return IntuPair(*_numbers(body, subject, 2))
    except ProblemFileError:
        raise
    except HOHFError as exc:
        raise ProblemFileError(
            "SCHEMA_ERROR", exc.message, details={**subject, "cause": exc.code}
        ) from exc
    raise ProblemFileError(
        "SCHEMA_ERROR",
        f"unknown variant tag {tag!r}",
        details={**subject, "tag": tag},
    )


def _parse_cell(
    raw: Any,
    subject: dict[str, Any],
    mode: ValidationMode,
    warnings: list[ReportWarning],
) -> HOHFE:
    if not isinstance(raw, list) or not raw:
        raise ProblemFileError(
            "SCHEMA_ERROR",
            "each cell must be a nonempty list of tagged values",
            details=subject,
        )
    values = []
    for member, item in enumerate(raw):
        member_subject = {**subject, "member": member}
        value = parse_gvalue(item, member_subject)
        hard = gv_validate(value, mode)
        if hard:
            raise ProblemFileError(
                "VALIDATION_ERROR",
                f"{hard[0].field} violates {hard[0].bound}",
                details={
                    **member_subject,
                    "violations": [violation.code for violation in hard],
                },
            )
        for violation in gv_validate(value, ValidationMode.STRICT):
            warnings.append(
                ReportWarning(
                    code=_LENIENT_WARNING_CODES.get(violation.code, violation.code),
                    message=f"{violation.field} violates {violation.bound}",
                    subject={**member_subject, "field": violation.field},
                )
            )
        values.append(value)
    return HOHFE(tuple(values))


def _parse_measure(
    raw: Any,
    criteria: tuple[str, ...],
    mode: ValidationMode,
    options: ArithmeticOptions,
) -> tuple[FuzzyMeasure, RhoRuleSource | None]:
    if not isinstance(raw, dict) or len(raw) != 1:
        raise ProblemFileError(
            "SCHEMA_ERROR",
            "'measure' must hold exactly one of 'entries' or 'rho_rule'",
        )
    if "entries" in raw:
        return _parse_entries(raw["entries"], criteria, mode), None
    if "rho_rule" not in raw:
        raise ProblemFileError(
            "SCHEMA_ERROR",
            "'measure' must hold exactly one of 'entries' or 'rho_rule'",
            details={"keys": sorted(raw)},
        )

    rule = raw["rho_rule"]
    if not isinstance(rule, dict) or not isinstance(rule.get("singletons"), dict):
        raise ProblemFileError(
            "SCHEMA_ERROR", "'rho_rule' needs a 'singletons' object"
        )
    singletons_raw = rule["singletons"]
    if set(singletons_raw) != set(criteria):
        raise ProblemFileError(
            "SCHEMA_ERROR",
            "'singletons' must name every criterion exactly once",
            details={"criteria": list(criteria), "got": sorted(singletons_raw)},
        )
    singletons = tuple(
        _numbers([singletons_raw[label]], {"criterion": label})[0]
        for label in criteria
    )
    rho = rule.get("rho")
    if rho is not None and (isinstance(rho, bool) or not isinstance(rho, (int, float))):
        raise ProblemFileError("SCHEMA_ERROR", "'rho' must be a number or null")

    effective_rho = (
        float(rho)
        if rho is not None
        else measure_solve_rho(singletons, sign=options.rho_sign)
    )
    measure = measure_rho_rule(
        singletons,
        effective_rho,
        sign=options.rho_sign,
        mode=mode,
        labels=criteria,
    )
    return measure, RhoRuleSource(singletons, None if rho is None else float(rho))


def _parse_entries(
    raw: Any, criteria: tuple[str, ...], mode: ValidationMode
) -> FuzzyMeasure:
    if not isinstance(raw, list):
        raise ProblemFileError("SCHEMA_ERROR", "'entries' must be a list")
    table: dict[int, float] = {}
    for position, entry in enumerate(raw):
        subject = {"entry": position}
        if not isinstance(entry, dict) or set(entry) != {"subset", "value"}:
            raise ProblemFileError(
                "SCHEMA_ERROR",
                "measure entries need exactly 'subset' and 'value'",
                details=subject,
            )
        subset = entry["subset"]
        if not isinstance(subset, list) or any(label not in criteria for label in subset):
            raise ProblemFileError(
                "SCHEMA_ERROR",
                "measure subsets must list known criterion labels",
                details={**subject, "subset": subset},
            )
        mask = mask_of(criteria.index(label) for label in subset)
        if mask in table:
            raise ProblemFileError(
                "SCHEMA_ERROR",
                "subset listed twice",
                details={**subject, "subset": subset},
            )
        table[mask] = _numbers([entry["value"]], subject)[0]
    return measure_from_table(len(criteria), table, mode, labels=criteria)


def _parse_reference_scores(raw: Any, alternatives: tuple[str, ...]) -> dict[str, float]:
    if not isinstance(raw, dict):
        raise ProblemFileError("SCHEMA_ERROR", "'reference_scores' must be an object")
    unknown = sorted(set(raw) - set(alternatives))
    if unknown:
        raise ProblemFileError(
            "SCHEMA_ERROR",
            "reference scores name unknown alternatives",
            details={"alternatives": unknown},
        )
    return {
        label: _numbers([raw[label]], {"alternative": label})[0]
        for label in alternatives
        if label in raw
    }


def serialize_gvalue(g: GValue) -> dict[str, Any]:
    if isinstance(g, Crisp):
        return {"crisp": g.m}
    return {g.kind.value: list(g.degrees())}


def serialize_problem(spec: ProblemSpec) -> dict[str, Any]:
    """Inverse of :func:`problem_from_dict` up to value equality."""

    matrix = spec.matrix
    payload: dict[str, Any] = {
        "alternatives": list(matrix.alternatives),
        "criteria": list(matrix.criteria),
        "matrix": [
            [[serialize_gvalue(value) for value in cell] for cell in row]
            for row in matrix.cells
        ],
    }
    if spec.rho_rule is not None:
        payload["measure"] = {
            "rho_rule": {
                "singletons": dict(zip(matrix.criteria, spec.rho_rule.singletons)),
                "rho": spec.rho_rule.rho,
            }
        }
    else:
        payload["measure"] = {
            "entries": [
                {"subset": spec.measure.subset_labels(mask), "value": value}
                for mask, value in enumerate(spec.measure.values)
            ]
        }
    options = spec.options.to_dict()
    if options:
        payload["options"] = options
    if spec.reference_scores:
        payload["reference_scores"] = dict(spec.reference_scores)
    return payload


def dump_problem(spec: ProblemSpec, path: str | Path) -> None:
    Path(path).write_text(
        json.dumps(serialize_problem(spec), indent=2) + "\n", encoding="utf-8"
    )


def parse_rankings(path: str | Path) -> list[RankingOrder]:
    """Load technique orders, optionally with printed dominance vectors."""

    payload = load_json(path)
    return rankings_from_dict(payload)


def rankings_from_dict(payload: Any) -> list[RankingOrder]:
    if not isinstance(payload, dict) or not isinstance(payload.get("rankings"), list):
        raise ProblemFileError(
            "SCHEMA_ERROR", "rankings file must hold a 'rankings' list"
        )
    if not payload["rankings"]:
        raise ProblemFileError("SCHEMA_ERROR", "'rankings' must not be empty")

    alternatives = payload.get("alternatives")
    rankings: list[RankingOrder] = []
    for position, entry in enumerate(payload["rankings"]):
        subject = {"ranking": position}
        if not isinstance(entry, dict):
            raise ProblemFileError(
                "SCHEMA_ERROR", "each ranking must be an object", details=subject
            )
        technique = entry.get("technique")
        order = entry.get("order")
        if not isinstance(technique, str) or not technique:
            raise ProblemFileError(
                "SCHEMA_ERROR", "ranking needs a 'technique' label", details=subject
            )
        if not isinstance(order, list) or not all(isinstance(label, str) for label in order):
            raise ProblemFileError(
                "SCHEMA_ERROR",
                "ranking needs an 'order' list of labels",
                details={**subject, "technique": technique},
            )
        if alternatives is not None and sorted(order) != sorted(alternatives):
            raise ProblemFileError(
                "SCHEMA_ERROR",
                f"technique {technique!r} does not rank the declared alternatives",
                details={"technique": technique, "order": order},
            )
        dominance = entry.get("dominance")
        if dominance is not None:
            if not isinstance(dominance, list) or not all(
                isinstance(value, int) and not isinstance(value, bool)
                for value in dominance
            ):
                raise ProblemFileError(
                    "SCHEMA_ERROR",
                    "'dominance' must be a list of integers",
                    details={"technique": technique},
                )
        try:
            rankings.append(
                RankingOrder(
                    technique,
                    tuple(order),
                    None if dominance is None else tuple(dominance),
                )
            )
        except HOHFError as exc:
            raise ProblemFileError(
                "VALIDATION_ERROR", exc.message, details={"cause": exc.to_dict()}
            ) from exc
    return rankings
