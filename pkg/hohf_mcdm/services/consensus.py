"""Rank consensus across decision techniques.

Each technique contributes a strict order over the same alternatives. The
orders are summed as pairwise preference matrices, the majority relation of
the sum gives the collective order, and techniques are sorted by how far
their dominance vectors sit from the collective one.
"""

from __future__ import annotations

import itertools
import logging
import re
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from hohf_mcdm.config import EQUALITY_TOLERANCE
from hohf_mcdm.models import DistanceMetric, MatrixKind, ReportWarning
from hohf_mcdm.services.errors import HOHFError

logger = logging.getLogger(__name__)

COLLECTIVE_LABEL = "collective"


class ConsensusError(HOHFError):
    """Raised when rankings cannot be combined into a collective order."""


def natural_key(label: str) -> tuple:
    """Sort key that places y2 before y10."""

    return tuple(
        (0, int(part)) if part.isdigit() else (1, part)
        for part in re.split(r"(\d+)", label)
        if part
    )


@dataclass(frozen=True, slots=True)
class RankingOrder:
    """A technique's strict order over alternatives, best first.

    ``printed_dominance`` optionally carries a dominance vector supplied
    alongside the order, in canonical alternative order.
    """

    technique: str
    order: tuple[str, ...]
    printed_dominance: tuple[int, ...] | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "order", tuple(self.order))
        if not self.order:
            raise ConsensusError(
                "EMPTY_ORDER",
                f"technique {self.technique!r} ranks no alternatives",
                details={"technique": self.technique},
            )
        if len(set(self.order)) != len(self.order):
            raise ConsensusError(
                "DUPLICATE_LABEL",
                f"technique {self.technique!r} ranks an alternative twice",
                details={"technique": self.technique, "order": list(self.order)},
            )
        if self.printed_dominance is not None:
            printed = tuple(int(value) for value in self.printed_dominance)
            if len(printed) != len(self.order):
                raise ConsensusError(
                    "DIMENSION_MISMATCH",
                    "printed dominance vector does not match the order length",
                    details={
                        "technique": self.technique,
                        "printed": list(printed),
                        "alternatives": len(self.order),
                    },
                )
            object.__setattr__(self, "printed_dominance", printed)

    @property
    def alternatives(self) -> tuple[str, ...]:
        return tuple(sorted(self.order, key=natural_key))

    def reversed(self) -> "RankingOrder":
        return RankingOrder(self.technique, tuple(reversed(self.order)))


@dataclass(frozen=True, eq=False)
class PreferenceMatrix:
    """Antisymmetric pairwise preference matrix over ``alternatives``."""

    alternatives: tuple[str, ...]
    matrix: np.ndarray
    kind: MatrixKind = MatrixKind.INDIVIDUAL

    def __post_init__(self) -> None:
        matrix = np.array(self.matrix, dtype=np.int64)
        size = len(self.alternatives)
        if matrix.shape != (size, size):
            raise ConsensusError(
                "DIMENSION_MISMATCH",
                "matrix shape does not match the alternatives",
                details={"shape": list(matrix.shape), "alternatives": size},
            )
        if np.any(matrix != -matrix.T):
            raise ConsensusError(
                "NOT_ANTISYMMETRIC", "preference matrices must satisfy r_ij = -r_ji"
            )
        if self.kind is MatrixKind.INDIVIDUAL and np.any(np.abs(matrix) > 1):
            raise ConsensusError(
                "VALUE_OUT_OF_RANGE",
                "individual preference entries must be -1, 0 or +1",
            )
        matrix.setflags(write=False)
        object.__setattr__(self, "matrix", matrix)

    def entry(self, left: str, right: str) -> int:
        return int(
            self.matrix[self.alternatives.index(left), self.alternatives.index(right)]
        )

    def to_lists(self) -> list[list[int]]:
        return self.matrix.tolist()


@dataclass(frozen=True, slots=True)
class DominanceVector:
    """Per-alternative dominance count plus one, in ``alternatives`` order."""

    alternatives: tuple[str, ...]
    values: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.values)

    def of(self, alternative: str) -> int:
        return self.values[self.alternatives.index(alternative)]


def _canonical(r: RankingOrder, alternatives: Sequence[str] | None) -> tuple[str, ...]:
    if alternatives is None:
        return r.alternatives
    alternatives = tuple(alternatives)
    if set(alternatives) != set(r.order) or len(alternatives) != len(r.order):
        raise ConsensusError(
            "LABEL_MISMATCH",
            f"technique {r.technique!r} ranks a different set of alternatives",
            details={
                "technique": r.technique,
                "expected": list(alternatives),
                "got": list(r.order),
            },
        )
    return alternatives


def _positions(r: RankingOrder, alternatives: Sequence[str]) -> np.ndarray:
    rank = {label: position for position, label in enumerate(r.order)}
    return np.array([rank[label] for label in alternatives], dtype=np.int64)


def preference_matrix(
    r: RankingOrder, alternatives: Sequence[str] | None = None
) -> PreferenceMatrix:
    """Individual matrix: +1 where the row alternative is ranked higher."""

    labels = _canonical(r, alternatives)
    positions = _positions(r, labels)
    matrix = np.sign(positions[np.newaxis, :] - positions[:, np.newaxis])
    return PreferenceMatrix(labels, matrix, MatrixKind.INDIVIDUAL)


def dominance_vector(
    r: RankingOrder, alternatives: Sequence[str] | None = None
) -> DominanceVector:
    labels = _canonical(r, alternatives)
    positions = _positions(r, labels)
    values = len(labels) - positions
    return DominanceVector(labels, tuple(int(value) for value in values))


def collective_matrix(rs: Sequence[RankingOrder]) -> PreferenceMatrix:
    """Componentwise sum of the individual preference matrices."""

    if not rs:
        raise ConsensusError("EMPTY_RANKINGS", "at least one ranking is required")
    labels = rs[0].alternatives
    total = np.zeros((len(labels), len(labels)), dtype=np.int64)
    for r in rs:
        total += preference_matrix(r, labels).matrix
    return PreferenceMatrix(labels, total, MatrixKind.COLLECTIVE)


def extract_collective(cm: PreferenceMatrix) -> RankingOrder:
    """Read the majority relation of ``cm`` as a strict total order.

    A zero off-diagonal entry (majority tie) or a Condorcet cycle means the
    relation is not a total order; the offending pair or triple is reported.
    """

    labels = cm.alternatives
    matrix = cm.matrix
    for i, j in itertools.combinations(range(len(labels)), 2):
        if matrix[i, j] == 0:
            raise ConsensusError(
                "NOT_A_TOTAL_ORDER",
                f"majority tie between {labels[i]} and {labels[j]}",
                details={"pair": [labels[i], labels[j]]},
            )

    wins = (matrix > 0).sum(axis=1)
    order = [int(index) for index in np.argsort(-wins, kind="stable")]
    for position, i in enumerate(order):
        for j in order[position + 1 :]:
            if matrix[i, j] < 0:
                raise ConsensusError(
                    "NOT_A_TOTAL_ORDER",
                    "the majority relation contains a cycle",
                    details={"cycle": _find_cycle(labels, matrix)},
                )
    return RankingOrder(COLLECTIVE_LABEL, tuple(labels[i] for i in order))


def _find_cycle(labels: Sequence[str], matrix: np.ndarray) -> list[str]:
    # A complete, intransitive majority relation always contains a 3-cycle.
    for a, b, c in itertools.permutations(range(len(labels)), 3):
        if matrix[a, b] > 0 and matrix[b, c] > 0 and matrix[c, a] > 0:
            return [labels[a], labels[b], labels[c]]
    return []


def preference_distance(
    p1: DominanceVector | Sequence[int],
    p2: DominanceVector | Sequence[int],
    metric: DistanceMetric = DistanceMetric.L1,
) -> float:
    """Distance between two dominance vectors.

    ``L1`` sums componentwise absolute differences. ``MAXMIN`` is the
    symmetric Hausdorff distance between the vectors read as value sets.
    """

    left = np.asarray(getattr(p1, "values", p1), dtype=float)
    right = np.asarray(getattr(p2, "values", p2), dtype=float)
    if left.shape != right.shape:
        raise ConsensusError(
            "DIMENSION_MISMATCH",
            "dominance vectors differ in length",
            details={"left": len(left), "right": len(right)},
        )
    if DistanceMetric.parse(metric) is DistanceMetric.L1:
        return float(np.abs(left - right).sum())
    if left.size == 0:
        return 0.0
    gaps = np.abs(left[:, np.newaxis] - right[np.newaxis, :])
    return float(max(gaps.min(axis=1).max(), gaps.min(axis=0).max()))


@dataclass(frozen=True, slots=True)
class TechniqueEntry:
    technique: str
    order: tuple[str, ...]
    vector: DominanceVector
    distance: float
    tier: int
    weight: float
    printed_dominance: tuple[int, ...] | None = None


@dataclass(frozen=True, slots=True)
class TechniqueComparison:
    """Outcome of sorting techniques against the collective preference."""

    alternatives: tuple[str, ...]
    metric: DistanceMetric
    collective: PreferenceMatrix
    collective_order: RankingOrder
    collective_vector: DominanceVector
    entries: tuple[TechniqueEntry, ...]
    tiers: tuple[tuple[str, ...], ...]
    notes: tuple[ReportWarning, ...] = field(default=())

    def entry(self, technique: str) -> TechniqueEntry:
        for entry in self.entries:
            if entry.technique == technique:
                return entry
        raise ConsensusError(
            "UNKNOWN_TECHNIQUE",
            f"no technique labelled {technique!r}",
            details={"technique": technique},
        )

    def tier_distances(self) -> list[float]:
        return [self.entry(tier[0]).distance for tier in self.tiers]


def sort_techniques(
    rs: Sequence[RankingOrder],
    *,
    metric: DistanceMetric = DistanceMetric.L1,
    use_printed_vectors: bool = False,
) -> TechniqueComparison:
    """Group techniques into tiers of equal distance from the collective order.

    Smaller distance means closer agreement; tier 1 is best. Weights are the
    normalized inverse tier index.
    """

    metric = DistanceMetric.parse(metric)
    collective = collective_matrix(rs)
    labels = collective.alternatives
    collective_order = extract_collective(collective)
    collective_vector = dominance_vector(collective_order, labels)

    notes: list[ReportWarning] = []
    measured: list[tuple[RankingOrder, DominanceVector, float]] = []
    for r in rs:
        vector = dominance_vector(r, labels)
        if r.printed_dominance is not None and r.printed_dominance != vector.values:
            notes.append(
                ReportWarning(
                    code="DOMINANCE_VECTOR_MISMATCH",
                    message=(
                        f"{r.technique}: printed vector {list(r.printed_dominance)} "
                        f"disagrees with its order, which gives {list(vector.values)}"
                    ),
                    subject={
                        "technique": r.technique,
                        "printed": list(r.printed_dominance),
                        "computed": list(vector.values),
                    },
                )
            )
            if use_printed_vectors:
                vector = DominanceVector(labels, r.printed_dominance)
        measured.append(
            (r, vector, preference_distance(vector, collective_vector, metric))
        )

    # one tier per distinct distance, ascending; labels de-duplicated
    distances: dict[str, float] = {}
    for r, _, distance in measured:
        distances.setdefault(r.technique, distance)
    levels: list[float] = []
    for distance in sorted(distances.values()):
        if not levels or distance - levels[-1] > EQUALITY_TOLERANCE:
            levels.append(distance)

    def tier_of(distance: float) -> int:
        return next(
            index + 1
            for index, level in enumerate(levels)
            if abs(distance - level) <= EQUALITY_TOLERANCE
        )

    tiers = tuple(
        tuple(
            sorted(
                (label for label, distance in distances.items() if tier_of(distance) == index + 1),
                key=natural_key,
            )
        )
        for index in range(len(levels))
    )
    inverse_total = sum(1.0 / tier_of(distance) for _, _, distance in measured)
    entries = tuple(
        TechniqueEntry(
            technique=r.technique,
            order=r.order,
            vector=vector,
            distance=distance,
            tier=tier_of(distance),
            weight=(1.0 / tier_of(distance)) / inverse_total,
            printed_dominance=r.printed_dominance,
        )
        for r, vector, distance in measured
    )

    logger.info(
        "sorted techniques",
        extra={
            "techniques": len(entries),
            "tiers": len(tiers),
            "metric": metric.value,
            "collective_order": list(collective_order.order),
        },
    )
    return TechniqueComparison(
        alternatives=labels,
        metric=metric,
        collective=collective,
        collective_order=collective_order,
        collective_vector=collective_vector,
        entries=entries,
        tiers=tiers,
        notes=tuple(notes),
    )
