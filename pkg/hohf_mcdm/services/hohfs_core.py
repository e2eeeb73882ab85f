"""Higher-order hesitant fuzzy elements and sets.

A HOHFE is a de-duplicated, insertion-ordered collection of G-type values.
Operations on HOHFEs are lifted from the G-type operations by taking the
cross product of members.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Iterator, Sequence

from hohf_mcdm.config import EQUALITY_TOLERANCE
from hohf_mcdm.models import (
    CombinePolicy,
    Comparison,
    GValueKind,
    ValidationMode,
)
from hohf_mcdm.services.errors import HOHFError
from hohf_mcdm.services.gtype_values import (
    GValue,
    gv_equal,
    gv_oplus,
    gv_scale,
    gv_score,
)
from hohf_mcdm.services.settings import DEFAULT_ARITHMETIC, ArithmeticOptions

logger = logging.getLogger(__name__)


class HOHFEError(HOHFError):
    """Raised when a HOHFE cannot be built or combined."""


@dataclass(frozen=True, slots=True)
class HOHFE:
    elements: tuple[GValue, ...]

    def __post_init__(self) -> None:
        if not self.elements:
            raise HOHFEError("EMPTY_HOHFE", "a HOHFE needs at least one element")
        object.__setattr__(self, "elements", _dedup(self.elements))

    @classmethod
    def of(cls, *elements: GValue) -> "HOHFE":
        return cls(tuple(elements))

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[GValue]:
        return iter(self.elements)

    def kinds(self) -> set[GValueKind]:
        return {element.kind for element in self.elements}


def _dedup(elements: Iterable[GValue]) -> tuple[GValue, ...]:
    # First occurrence wins so results stay deterministic.
    kept: list[GValue] = []
    for element in elements:
        if any(gv_equal(element, existing) for existing in kept):
            continue
        kept.append(element)
    return tuple(kept)


def hohfe_equal(h1: HOHFE, h2: HOHFE, *, tol: float = EQUALITY_TOLERANCE) -> bool:
    """Order-insensitive equality of two HOHFEs within ``tol``."""

    if len(h1) != len(h2):
        return False
    return all(
        any(gv_equal(left, right, tol=tol) for right in h2.elements)
        for left in h1.elements
    )


@dataclass(frozen=True, slots=True)
class DecisionMatrix:
    """Alternatives x criteria grid of HOHFE evaluations."""

    alternatives: tuple[str, ...]
    criteria: tuple[str, ...]
    cells: tuple[tuple[HOHFE, ...], ...]

    def __post_init__(self) -> None:
        if len(self.cells) != len(self.alternatives):
            raise HOHFEError(
                "DIMENSION_MISMATCH",
                "row count does not match the alternative labels",
                details={
                    "rows": len(self.cells),
                    "alternatives": len(self.alternatives),
                },
            )
        for label, row in zip(self.alternatives, self.cells):
            if len(row) != len(self.criteria):
                raise HOHFEError(
                    "DIMENSION_MISMATCH",
                    f"row {label!r} does not match the criterion labels",
                    details={
                        "alternative": label,
                        "cells": len(row),
                        "criteria": len(self.criteria),
                    },
                )
        for name, labels in (
            ("alternatives", self.alternatives),
            ("criteria", self.criteria),
        ):
            if len(set(labels)) != len(labels):
                raise HOHFEError(
                    "DUPLICATE_LABEL",
                    f"{name} labels must be unique",
                    details={name: list(labels)},
                )

    def row(self, alternative: str) -> tuple[HOHFE, ...]:
        try:
            return self.cells[self.alternatives.index(alternative)]
        except ValueError as exc:
            raise HOHFEError(
                "UNKNOWN_ALTERNATIVE",
                f"no alternative labelled {alternative!r}",
                details={"alternative": alternative},
            ) from exc

    def cell(self, alternative: str, criterion: str) -> HOHFE:
        row = self.row(alternative)
        try:
            return row[self.criteria.index(criterion)]
        except ValueError as exc:
            raise HOHFEError(
                "UNKNOWN_CRITERION",
                f"no criterion labelled {criterion!r}",
                details={"criterion": criterion},
            ) from exc


@dataclass(frozen=True, slots=True)
class WeightedTerm:
    """One summand of a Choquet aggregation: a marginal weight and a HOHFE."""

    weight: float
    element: HOHFE


def hohfe_score(h: HOHFE) -> float:
    """Mean G-type score over the members of ``h``."""

    return sum(gv_score(element) for element in h.elements) / len(h.elements)


def _compare_scores(left: float, right: float) -> Comparison:
    difference = left - right
    if abs(difference) <= EQUALITY_TOLERANCE:
        return Comparison.EQUIVALENT
    return Comparison.SUCCEEDS if difference > 0 else Comparison.PRECEDES


def hohfe_compare(h1: HOHFE, h2: HOHFE) -> Comparison:
    """Order ``h1`` relative to ``h2`` by score."""

    return _compare_scores(hohfe_score(h1), hohfe_score(h2))


def hohfe_scale(
    lam: float,
    h: HOHFE,
    *,
    mode: ValidationMode = ValidationMode.LENIENT,
    options: ArithmeticOptions = DEFAULT_ARITHMETIC,
) -> HOHFE:
    return HOHFE(
        tuple(gv_scale(lam, element, mode=mode, options=options) for element in h)
    )


def hohfe_combine(
    terms: Sequence[WeightedTerm],
    policy: CombinePolicy = CombinePolicy.TYPEWISE,
    *,
    mode: ValidationMode = ValidationMode.LENIENT,
    options: ArithmeticOptions = DEFAULT_ARITHMETIC,
) -> HOHFE:
    """Scale each term by its weight and add them as a HOHFE cross product.

    Zero-weight terms are dropped before anything else, since zero is the
    additive identity. Under ``TYPEWISE`` members are grouped by variant and
    each group is combined only across the terms that contribute to it; a
    group fed by a single term passes through scaled. ``STRICT_UNIFORM``
    requires one variant everywhere.
    """

    if not terms:
        raise HOHFEError("EMPTY_TERMS", "at least one weighted term is required")

    active = [term for term in terms if term.weight != 0.0]
    if not active:
        raise HOHFEError(
            "EMPTY_TERMS",
            "every term has weight zero",
            details={"terms": len(terms)},
        )

    scaled = [
        hohfe_scale(term.weight, term.element, mode=mode, options=options)
        for term in active
    ]

    policy = CombinePolicy.parse(policy)
    if policy is CombinePolicy.STRICT_UNIFORM:
        kinds = set().union(*(h.kinds() for h in scaled))
        if len(kinds) > 1:
            raise HOHFEError(
                "MIXED_TYPES",
                "strict-uniform combination needs a single G-type variant",
                details={"kinds": sorted(kind.value for kind in kinds)},
            )
        return HOHFE(_cross_sum([list(h.elements) for h in scaled], options))

    # kind -> one member list per contributing term, in first-seen order
    classes: dict[GValueKind, list[list[GValue]]] = {}
    for h in scaled:
        grouped: dict[GValueKind, list[GValue]] = {}
        for element in h.elements:
            grouped.setdefault(element.kind, []).append(element)
        for kind, members in grouped.items():
            classes.setdefault(kind, []).append(members)

    combined: list[GValue] = []
    for kind, per_term in classes.items():
        logger.debug(
            "combining variant class",
            extra={
                "kind": kind.value,
                "terms": len(per_term),
                "members": [len(members) for members in per_term],
            },
        )
        combined.extend(_cross_sum(per_term, options))
    return HOHFE(tuple(combined))


def _cross_sum(
    per_term: list[list[GValue]], options: ArithmeticOptions
) -> tuple[GValue, ...]:
    return tuple(
        reduce(lambda left, right: gv_oplus(left, right, options=options), choice)
        for choice in itertools.product(*per_term)
    )


def hohfs_score(rows: Sequence[HOHFE]) -> float:
    """Score of a HOHFS: the mean HOHFE score over its criteria."""

    if not rows:
        raise HOHFEError("EMPTY_HOHFS", "a HOHFS needs at least one element")
    return sum(hohfe_score(h) for h in rows) / len(rows)


def hohfs_compare(rows1: Sequence[HOHFE], rows2: Sequence[HOHFE]) -> Comparison:
    return _compare_scores(hohfs_score(rows1), hohfs_score(rows2))
