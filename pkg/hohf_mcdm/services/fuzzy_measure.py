"""Fuzzy measures (capacities) over the criterion index set.

Subsets are bitmasks with criterion 0 in the lowest bit. A measure stores a
value for every one of the 2**n subsets.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from scipy.optimize import bisect

from hohf_mcdm.config import (
    EQUALITY_TOLERANCE,
    NORMALIZATION_TOLERANCE,
    defaults,
)
from hohf_mcdm.models import (
    MeasureClass,
    ReportWarning,
    RhoSign,
    ValidationMode,
)
from hohf_mcdm.services.errors import HOHFError

logger = logging.getLogger(__name__)


class FuzzyMeasureError(HOHFError):
    """Raised when a measure table is incomplete or violates its mode."""


def mask_of(indices: Iterable[int]) -> int:
    mask = 0
    for index in indices:
        mask |= 1 << index
    return mask


def indices_of(mask: int) -> tuple[int, ...]:
    return tuple(index for index in range(mask.bit_length()) if mask >> index & 1)


def _proper_submasks(mask: int) -> Iterable[int]:
    sub = (mask - 1) & mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


@dataclass(frozen=True, slots=True)
class FuzzyMeasure:
    n: int
    values: tuple[float, ...]
    mode: ValidationMode = ValidationMode.LENIENT
    labels: tuple[str, ...] = ()
    warnings: tuple[ReportWarning, ...] = field(default=(), compare=False)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def value(self, mask: int) -> float:
        return self.values[mask]

    def subset_labels(self, mask: int) -> list[str]:
        return [self.label(index) for index in indices_of(mask)]

    def label(self, index: int) -> str:
        return self.labels[index] if self.labels else f"x{index + 1}"

    @property
    def is_monotone(self) -> bool:
        return not any(w.code == "MONOTONICITY_VIOLATION" for w in self.warnings)

    @property
    def is_normalized(self) -> bool:
        return self.values[self.full_mask] == 1.0


def measure_from_table(
    n: int,
    entries: Mapping[int, float],
    mode: ValidationMode = ValidationMode.LENIENT,
    *,
    labels: Sequence[str] = (),
) -> FuzzyMeasure:
    """Build a measure from a total subset->value table keyed by bitmask.

    In lenient mode monotonicity violations and an unnormalized full set are
    recorded as warnings instead of raising.
    """

    mode = ValidationMode.parse(mode)
    if n < 1:
        raise FuzzyMeasureError("DIMENSION_MISMATCH", "a measure needs n >= 1")
    if labels and len(labels) != n:
        raise FuzzyMeasureError(
            "DIMENSION_MISMATCH",
            "label count does not match n",
            details={"labels": list(labels), "n": n},
        )

    full = (1 << n) - 1
    unknown = sorted(mask for mask in entries if not 0 <= mask <= full)
    if unknown:
        raise FuzzyMeasureError(
            "MISSING_SUBSET",
            "table references subsets outside the criterion set",
            details={"masks": unknown},
        )
    missing = [mask for mask in range(full + 1) if mask not in entries]
    if missing:
        raise FuzzyMeasureError(
            "MISSING_SUBSET",
            f"{len(missing)} subset(s) have no value",
            details={"subsets": [_labels_for(mask, labels) for mask in missing]},
        )

    values = tuple(float(entries[mask]) for mask in range(full + 1))
    for mask, value in enumerate(values):
        if not 0.0 <= value <= 1.0:
            raise FuzzyMeasureError(
                "VALUE_OUT_OF_RANGE",
                "measure values must lie in [0, 1]",
                details={"subset": _labels_for(mask, labels), "value": value},
            )

    warnings: list[ReportWarning] = []
    if values[0] != 0.0:
        raise FuzzyMeasureError(
            "BAD_BOUNDARY",
            "the empty set must have measure 0",
            details={"value": values[0]},
        )
    if values[full] != 1.0:
        if mode is ValidationMode.STRICT:
            raise FuzzyMeasureError(
                "BAD_BOUNDARY",
                "the full criterion set must have measure 1",
                details={"value": values[full]},
            )
        warnings.append(
            ReportWarning(
                code="NOT_NORMALIZED",
                message=f"mu(X) = {values[full]!r}; marginal weights sum to it",
                subject={"subset": _labels_for(full, labels), "value": values[full]},
            )
        )

    violations = list(_monotonicity_violations(values, full, labels))
    if violations and mode is ValidationMode.STRICT:
        first = violations[0]
        raise FuzzyMeasureError(
            "MONOTONICITY_VIOLATION",
            f"{len(violations)} subset pair(s) break monotonicity",
            details={"first": first.subject, "count": len(violations)},
        )
    warnings.extend(violations)

    if warnings:
        logger.warning(
            "measure accepted with warnings",
            extra={"n": n, "warning_count": len(warnings)},
        )
    return FuzzyMeasure(
        n=n,
        values=values,
        mode=mode,
        labels=tuple(labels),
        warnings=tuple(warnings),
    )


def _labels_for(mask: int, labels: Sequence[str]) -> list[str]:
    return [labels[i] if labels else f"x{i + 1}" for i in indices_of(mask)]


def _monotonicity_violations(
    values: Sequence[float], full: int, labels: Sequence[str]
) -> Iterable[ReportWarning]:
    for superset in range(1, full + 1):
        for subset in _proper_submasks(superset):
            if values[subset] > values[superset]:
                yield ReportWarning(
                    code="MONOTONICITY_VIOLATION",
                    message=(
                        f"mu({_labels_for(subset, labels)}) = {values[subset]!r} > "
                        f"mu({_labels_for(superset, labels)}) = {values[superset]!r}"
                    ),
                    subject={
                        "subset": _labels_for(subset, labels),
                        "superset": _labels_for(superset, labels),
                        "subset_value": values[subset],
                        "superset_value": values[superset],
                    },
                )


def _union(a: float, b: float, rho: float, sign: RhoSign) -> float:
    if sign is RhoSign.MINUS:
        return a + b - rho * a * b
    return a + b + rho * a * b


def _check_singletons(singletons: Sequence[float]) -> None:
    if not singletons:
        raise FuzzyMeasureError("DIMENSION_MISMATCH", "no singleton weights given")
    for index, value in enumerate(singletons):
        if not 0.0 <= value <= 1.0:
            raise FuzzyMeasureError(
                "VALUE_OUT_OF_RANGE",
                "singleton weights must lie in [0, 1]",
                details={"index": index, "value": value},
            )


def _rho_values(
    singletons: Sequence[float], rho: float, sign: RhoSign
) -> list[float]:
    # mu(A) = mu({lowest}) (+) mu(A without lowest), applied in index order
    full = (1 << len(singletons)) - 1
    values = [0.0] * (full + 1)
    for mask in range(1, full + 1):
        lowest = mask & -mask
        rest = mask ^ lowest
        weight = singletons[lowest.bit_length() - 1]
        values[mask] = weight if rest == 0 else _union(weight, values[rest], rho, sign)
    return values


def measure_rho_rule(
    singletons: Sequence[float],
    rho: float,
    *,
    sign: RhoSign = RhoSign(defaults.DEFAULT_RHO_SIGN),
    mode: ValidationMode = ValidationMode.LENIENT,
    labels: Sequence[str] = (),
) -> FuzzyMeasure:
    """Generate a measure from singleton weights by the rho recurrence."""

    _check_singletons(singletons)
    if not rho > -1.0:
        raise FuzzyMeasureError(
            "VALUE_OUT_OF_RANGE", "rho must exceed -1", details={"rho": rho}
        )

    sign = RhoSign.parse(sign)
    values = _rho_values(singletons, rho, sign)
    full = len(values) - 1
    if abs(values[full] - 1.0) > NORMALIZATION_TOLERANCE:
        raise FuzzyMeasureError(
            "NOT_NORMALIZED",
            f"rho = {rho!r} gives mu(X) = {values[full]!r}",
            details={"rho": rho, "mu_full": values[full], "sign": sign.value},
        )
    values[full] = 1.0
    return measure_from_table(
        len(singletons), dict(enumerate(values)), mode, labels=labels
    )


def measure_solve_rho(
    singletons: Sequence[float],
    *,
    sign: RhoSign = RhoSign(defaults.DEFAULT_RHO_SIGN),
) -> float:
    """Find the rho that makes the rho-rule measure normalized.

    The recurrence is equivalent to Sugeno's lambda-measure with
    ``lambda = -rho`` (minus sign) or ``lambda = rho`` (plus sign), whose
    normalization residual is monotone in lambda; the root is bracketed on
    the side given by the singleton sum and refined by bisection.
    """

    _check_singletons(singletons)
    if sum(1 for value in singletons if value > 0.0) < 2:
        raise FuzzyMeasureError(
            "NO_ROOT",
            "at least two nonzero singleton weights are required",
            details={"singletons": list(singletons)},
        )

    sign = RhoSign.parse(sign)
    total = math.fsum(singletons)
    if abs(total - 1.0) <= defaults.SUM_TOLERANCE:
        return 0.0

    def residual(lam: float) -> float:
        mu_full = 0.0
        for weight in singletons:
            mu_full = mu_full + weight + lam * mu_full * weight
        return mu_full - 1.0

    # lambda window that keeps rho inside its admissible range; under the
    # minus sign lambda = -1 is included since the residual there is
    # -prod(1 - g_i) <= 0, so a root for sums above 1 lies in [-1, 0]
    if sign is RhoSign.MINUS:
        low, high = -1.0, -defaults.RHO_LOWER_BOUND
    else:
        low, high = defaults.RHO_LOWER_BOUND, defaults.RHO_UPPER_BOUND
    bracket = (low, 0.0) if total > 1.0 else (0.0, high)

    if abs(residual(bracket[0])) <= defaults.SUM_TOLERANCE:
        lam = bracket[0]
    elif residual(bracket[0]) * residual(bracket[1]) > 0:
        raise FuzzyMeasureError(
            "NO_ROOT",
            "no normalizing rho in the admissible range",
            details={
                "singletons": list(singletons),
                "sign": sign.value,
                "bracket": list(bracket),
            },
        )
    else:
        lam = bisect(residual, *bracket, xtol=defaults.RHO_XTOL)
    rho = -lam if sign is RhoSign.MINUS else lam
    logger.info(
        "solved rho",
        extra={"rho": rho, "sign": sign.value, "singleton_sum": total},
    )
    return float(rho)


def measure_classify(m: FuzzyMeasure) -> MeasureClass:
    """Classify ``m`` by checking every pair of disjoint subsets."""

    subadditive = superadditive = True
    for union in range(1, m.full_mask + 1):
        for part in _proper_submasks(union):
            if part == 0:
                continue
            rest = union ^ part
            if part > rest:
                continue
            difference = m.values[union] - (m.values[part] + m.values[rest])
            if difference > EQUALITY_TOLERANCE:
                subadditive = False
            elif difference < -EQUALITY_TOLERANCE:
                superadditive = False
            if not subadditive and not superadditive:
                return MeasureClass.GENERAL

    if subadditive and superadditive:
        return MeasureClass.ADDITIVE
    return MeasureClass.SUBADDITIVE if subadditive else MeasureClass.SUPERADDITIVE


def marginal_weights(m: FuzzyMeasure, sigma: Sequence[int]) -> list[float]:
    """Weights mu(A_k) - mu(A_{k-1}) along the chain given by ``sigma``."""

    if sorted(sigma) != list(range(m.n)):
        raise FuzzyMeasureError(
            "DIMENSION_MISMATCH",
            "sigma must be a permutation of the criterion indices",
            details={"sigma": list(sigma), "n": m.n},
        )
    weights: list[float] = []
    previous_mask = 0
    for index in sigma:
        mask = previous_mask | (1 << index)
        weights.append(m.values[mask] - m.values[previous_mask])
        previous_mask = mask
    return weights
