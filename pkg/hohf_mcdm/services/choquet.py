"""Choquet integral aggregation and ranking of alternatives."""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Mapping, Sequence

import numpy as np

from hohf_mcdm.config import DEFAULT_WORKERS, EQUALITY_TOLERANCE
from hohf_mcdm.models import (
    CombinePolicy,
    GValueKind,
    ReportWarning,
    ValidationMode,
)
from hohf_mcdm.services.errors import HOHFError
from hohf_mcdm.services.fuzzy_measure import FuzzyMeasure, marginal_weights
from hohf_mcdm.services.hohfs_core import (
    HOHFE,
    DecisionMatrix,
    WeightedTerm,
    hohfe_combine,
    hohfe_score,
)
from hohf_mcdm.services.settings import DEFAULT_ARITHMETIC, ArithmeticOptions

logger = logging.getLogger(__name__)


class ChoquetError(HOHFError):
    """Raised when an aggregation cannot be carried out."""


def choquet_real(f: Sequence[float], m: FuzzyMeasure) -> float:
    """Discrete Choquet integral of the real vector ``f`` with respect to ``m``."""

    if len(f) != m.n:
        raise ChoquetError(
            "DIMENSION_MISMATCH",
            "input length does not match the measure",
            details={"length": len(f), "n": m.n},
        )
    values = np.asarray(f, dtype=float)
    # stable sort on -f keeps ascending index among equal values
    sigma = np.argsort(-values, kind="stable")
    weights = np.asarray(marginal_weights(m, sigma.tolist()))
    return float(np.dot(weights, values[sigma]))


def sigma_order(row: Sequence[HOHFE]) -> tuple[int, ...]:
    """Criterion indices ordered by HOHFE score, best first.

    Neighbouring scores within the equality tolerance are chained into one
    tie group, and each group keeps ascending criterion index.
    """

    scores = [hohfe_score(element) for element in row]
    return tuple(
        index for group in _near_tie_groups(scores) for index in sorted(group)
    )


def _near_tie_groups(scores: Sequence[float]) -> list[list[int]]:
    # stable descending sort, then merge each neighbour within tolerance
    ordered = sorted(range(len(scores)), key=lambda idx: -scores[idx])
    groups: list[list[int]] = []
    for idx in ordered:
        if groups and scores[groups[-1][-1]] - scores[idx] <= EQUALITY_TOLERANCE:
            groups[-1].append(idx)
        else:
            groups.append([idx])
    return groups


@dataclass(frozen=True, slots=True)
class ChoquetTrace:
    """Intermediate values of one HOHF Choquet aggregation."""

    sigma: tuple[int, ...]
    weights: tuple[float, ...]
    aggregate: HOHFE


def choquet_trace(
    row: Sequence[HOHFE],
    m: FuzzyMeasure,
    policy: CombinePolicy = CombinePolicy.TYPEWISE,
    *,
    mode: ValidationMode = ValidationMode.LENIENT,
    options: ArithmeticOptions = DEFAULT_ARITHMETIC,
) -> ChoquetTrace:
    if len(row) != m.n:
        raise ChoquetError(
            "DIMENSION_MISMATCH",
            "row length does not match the measure",
            details={"length": len(row), "n": m.n},
        )

    sigma = sigma_order(row)
    weights = marginal_weights(m, sigma)
    for position, (index, weight) in enumerate(zip(sigma, weights)):
        if weight < 0 and GValueKind.IFS in row[index].kinds():
            raise ChoquetError(
                "NEGATIVE_WEIGHT_UNSUPPORTED",
                "an intuitionistic pair cannot take a negative marginal weight",
                details={
                    "criterion": m.label(index),
                    "position": position + 1,
                    "weight": weight,
                },
            )

    terms = [WeightedTerm(weight, row[index]) for index, weight in zip(sigma, weights)]
    aggregate = hohfe_combine(terms, policy, mode=mode, options=options)
    return ChoquetTrace(sigma=sigma, weights=tuple(weights), aggregate=aggregate)


def hohf_choquet(
    row: Sequence[HOHFE],
    m: FuzzyMeasure,
    policy: CombinePolicy = CombinePolicy.TYPEWISE,
    *,
    mode: ValidationMode = ValidationMode.LENIENT,
    options: ArithmeticOptions = DEFAULT_ARITHMETIC,
) -> HOHFE:
    """HOHF Choquet integral of one alternative's row."""

    return choquet_trace(row, m, policy, mode=mode, options=options).aggregate


@dataclass(frozen=True, slots=True)
class AlternativeResult:
    alternative: str
    sigma: tuple[str, ...]
    weights: tuple[float, ...]
    aggregate: HOHFE
    score: float
    reference_score: float | None = None

    @property
    def reference_delta(self) -> float | None:
        if self.reference_score is None:
            return None
        return self.score - self.reference_score


@dataclass(frozen=True, slots=True)
class AggregationReport:
    """Per-alternative aggregates plus the resulting ranking.

    ``results`` follow matrix row order; ``ranking`` lists tie groups from
    best to worst.
    """

    criteria: tuple[str, ...]
    results: tuple[AlternativeResult, ...]
    ranking: tuple[tuple[str, ...], ...]
    warnings: tuple[ReportWarning, ...] = field(default=())

    @property
    def scores(self) -> dict[str, float]:
        return {result.alternative: result.score for result in self.results}

    def result(self, alternative: str) -> AlternativeResult:
        for result in self.results:
            if result.alternative == alternative:
                return result
        raise ChoquetError(
            "UNKNOWN_ALTERNATIVE",
            f"no alternative labelled {alternative!r}",
            details={"alternative": alternative},
        )


def rank_alternatives(
    dm: DecisionMatrix,
    m: FuzzyMeasure,
    policy: CombinePolicy = CombinePolicy.TYPEWISE,
    *,
    mode: ValidationMode = ValidationMode.LENIENT,
    options: ArithmeticOptions = DEFAULT_ARITHMETIC,
    workers: int = DEFAULT_WORKERS,
    reference_scores: Mapping[str, float] | None = None,
) -> AggregationReport:
    """Aggregate every alternative and rank the overall evaluations."""

    if len(dm.criteria) != m.n:
        raise ChoquetError(
            "DIMENSION_MISMATCH",
            "decision matrix and measure disagree on the criterion count",
            details={"criteria": len(dm.criteria), "n": m.n},
        )
    reference_scores = reference_scores or {}

    def evaluate(alternative: str) -> AlternativeResult:
        trace = choquet_trace(
            dm.row(alternative), m, policy, mode=mode, options=options
        )
        return AlternativeResult(
            alternative=alternative,
            sigma=tuple(dm.criteria[index] for index in trace.sigma),
            weights=trace.weights,
            aggregate=trace.aggregate,
            score=hohfe_score(trace.aggregate),
            reference_score=reference_scores.get(alternative),
        )

    # map() yields in submission order, so parallel runs match sequential ones
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            results = tuple(executor.map(evaluate, dm.alternatives))
    else:
        results = tuple(map(evaluate, dm.alternatives))

    warnings = list(m.warnings)
    for result in results:
        for criterion, weight in zip(result.sigma, result.weights):
            if weight < 0:
                warnings.append(
                    ReportWarning(
                        code="NEGATIVE_MARGINAL_WEIGHT",
                        message=(
                            f"{result.alternative}: weight {weight:.4f} on "
                            f"{criterion} from a non-monotone measure"
                        ),
                        subject={
                            "alternative": result.alternative,
                            "criterion": criterion,
                            "weight": weight,
                        },
                    )
                )

    ranking = _tie_groups(results)
    logger.info(
        "ranked alternatives",
        extra={
            "alternatives": len(results),
            "tie_groups": len(ranking),
            "warning_count": len(warnings),
            "workers": workers,
        },
    )
    return AggregationReport(
        criteria=dm.criteria,
        results=results,
        ranking=ranking,
        warnings=tuple(warnings),
    )


def _tie_groups(results: Sequence[AlternativeResult]) -> tuple[tuple[str, ...], ...]:
    groups = _near_tie_groups([result.score for result in results])
    return tuple(
        tuple(results[idx].alternative for idx in sorted(group)) for group in groups
    )
