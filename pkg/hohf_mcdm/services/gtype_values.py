"""Generalized (G-type) fuzzy membership values and their arithmetic.

Four variants are supported: crisp degrees, triangular fuzzy numbers,
hesitant fuzzy elements and intuitionistic pairs. Addition is the
probabilistic sum ``a + b - ab`` applied per component (intuitionistic
non-memberships multiply instead). Values are immutable.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from typing import ClassVar, Union

from hohf_mcdm.config import EQUALITY_TOLERANCE
from hohf_mcdm.models import (
    Comparison,
    GValueKind,
    IntuScaling,
    ValidationMode,
)
from hohf_mcdm.services.errors import HOHFError
from hohf_mcdm.services.settings import DEFAULT_ARITHMETIC, ArithmeticOptions

logger = logging.getLogger(__name__)


class GValueError(HOHFError):
    """Raised when G-type arithmetic is undefined for the given operands."""


@dataclass(frozen=True, slots=True)
class Crisp:
    m: float

    kind: ClassVar[GValueKind] = GValueKind.CRISP

    def degrees(self) -> tuple[float, ...]:
        return (self.m,)


@dataclass(frozen=True, slots=True)
class Tfn:
    """Triangular fuzzy number (smallest, most promising, largest)."""

    a1: float
    a2: float
    a3: float

    kind: ClassVar[GValueKind] = GValueKind.TFN

    def degrees(self) -> tuple[float, ...]:
        return (self.a1, self.a2, self.a3)

    @classmethod
    def from_interval(cls, lower: float, upper: float) -> "Tfn":
        """Represent an interval-valued degree as a degenerate triangle."""
        return cls(lower, (lower + upper) / 2, upper)


@dataclass(frozen=True, slots=True)
class Hfe:
    """Hesitant fuzzy element; members are kept in nondecreasing order."""

    values: tuple[float, ...]

    kind: ClassVar[GValueKind] = GValueKind.HFE

    def __post_init__(self) -> None:
        members = tuple(float(value) for value in self.values)
        if not members:
            raise GValueError("EMPTY_HFE", "hesitant fuzzy element has no members")
        object.__setattr__(self, "values", tuple(sorted(members)))

    @classmethod
    def of(cls, *values: float) -> "Hfe":
        return cls(tuple(values))

    def degrees(self) -> tuple[float, ...]:
        return self.values


@dataclass(frozen=True, slots=True)
class IntuPair:
    """Intuitionistic pair of membership ``mu`` and non-membership ``nu``."""

    mu: float
    nu: float

    kind: ClassVar[GValueKind] = GValueKind.IFS

    def degrees(self) -> tuple[float, ...]:
        return (self.mu, self.nu)

    @property
    def hesitancy(self) -> float:
        return 1.0 - self.mu - self.nu


GValue = Union[Crisp, Tfn, Hfe, IntuPair]


@dataclass(frozen=True, slots=True)
class Violation:
    """A single broken invariant reported by :func:`gv_validate`."""

    code: str
    field: str
    bound: str


def _prob_sum(a: float, b: float) -> float:
    return a + b - a * b


def zero_of(g: GValue) -> GValue:
    """Return the additive identity with the same variant and shape as ``g``."""

    if isinstance(g, Crisp):
        return Crisp(0.0)
    if isinstance(g, Tfn):
        return Tfn(0.0, 0.0, 0.0)
    if isinstance(g, Hfe):
        return Hfe((0.0,) * len(g.values))
    return IntuPair(0.0, 1.0)


def gv_validate(g: GValue, mode: ValidationMode) -> list[Violation]:
    """List invariant violations of ``g`` under the given validation mode."""

    violations: list[Violation] = []
    strict = ValidationMode.parse(mode) is ValidationMode.STRICT

    if isinstance(g, IntuPair):
        # Real exponentiation in the scaling rule needs unit-range degrees.
        for name in ("mu", "nu"):
            value = getattr(g, name)
            if not 0.0 <= value <= 1.0:
                violations.append(Violation("OUT_OF_RANGE", name, "[0, 1]"))
        if strict and g.mu + g.nu > 1.0 + EQUALITY_TOLERANCE:
            violations.append(
                Violation("MU_NU_SUM_EXCEEDS_ONE", "mu+nu", "<= 1")
            )
        return violations

    if isinstance(g, Tfn):
        ascending = g.a1 <= g.a2 <= g.a3
        # Scaling by a negative marginal weight mirrors the triangle.
        descending = g.a1 >= g.a2 >= g.a3
        if not ascending and (strict or not descending):
            violations.append(Violation("CORNERS_NOT_SORTED", "a1,a2,a3", "a1 <= a2 <= a3"))
        names = ("a1", "a2", "a3")
    elif isinstance(g, Hfe):
        names = tuple(f"values[{idx}]" for idx in range(len(g.values)))
    else:
        names = ("m",)

    if strict:
        for name, value in zip(names, g.degrees()):
            if not 0.0 <= value <= 1.0:
                violations.append(Violation("OUT_OF_RANGE", name, "[0, 1]"))
    return violations


def gv_scale(
    lam: float,
    g: GValue,
    *,
    mode: ValidationMode = ValidationMode.LENIENT,
    options: ArithmeticOptions = DEFAULT_ARITHMETIC,
) -> GValue:
    """Multiply ``g`` by the scalar ``lam``."""

    if isinstance(g, IntuPair):
        if lam < 0:
            raise GValueError(
                "NEGATIVE_LAMBDA",
                "intuitionistic pairs cannot be scaled by a negative weight",
                details={"lambda": lam},
            )
        if lam == 0:
            return IntuPair(0.0, 1.0)
        if options.intu_scaling is IntuScaling.PRINTED:
            return gv_power(lam, g)
        return IntuPair(1.0 - (1.0 - g.mu) ** lam, g.nu**lam)

    if lam < 0 and ValidationMode.parse(mode) is ValidationMode.STRICT:
        raise GValueError(
            "OUT_OF_RANGE",
            "negative scaling is only permitted in lenient mode",
            details={"lambda": lam, "kind": g.kind.value},
        )
    if isinstance(g, Crisp):
        return Crisp(lam * g.m)
    if isinstance(g, Tfn):
        return Tfn(lam * g.a1, lam * g.a2, lam * g.a3)
    return Hfe(tuple(lam * value for value in g.values))


def gv_power(lam: float, g: IntuPair) -> IntuPair:
    """Power of an intuitionistic pair: <mu^lam, 1 - (1 - nu)^lam>, lam > 0."""

    if lam <= 0:
        raise GValueError(
            "NEGATIVE_LAMBDA",
            "intuitionistic power requires a positive exponent",
            details={"lambda": lam},
        )
    return IntuPair(g.mu**lam, 1.0 - (1.0 - g.nu) ** lam)


def gv_oplus(
    g1: GValue,
    g2: GValue,
    *,
    options: ArithmeticOptions = DEFAULT_ARITHMETIC,
) -> GValue:
    """Add two values of the same variant."""

    if g1.kind is not g2.kind:
        raise GValueError(
            "TYPE_MISMATCH",
            f"cannot add {g1.kind.value} and {g2.kind.value}",
            details={"left": g1.kind.value, "right": g2.kind.value},
        )

    if isinstance(g1, Crisp):
        return Crisp(_prob_sum(g1.m, g2.m))
    if isinstance(g1, Tfn):
        return Tfn(
            _prob_sum(g1.a1, g2.a1),
            _prob_sum(g1.a2, g2.a2),
            _prob_sum(g1.a3, g2.a3),
        )
    if isinstance(g1, IntuPair):
        return IntuPair(_prob_sum(g1.mu, g2.mu), g1.nu * g2.nu)

    if len(g1.values) != len(g2.values):
        if not options.hfe_cross_product:
            raise GValueError(
                "CARDINALITY_MISMATCH",
                "hesitant elements of different lengths cannot be paired",
                details={"left": len(g1.values), "right": len(g2.values)},
            )
        return Hfe(
            _dedup_degrees(
                _prob_sum(a, b)
                for a, b in itertools.product(g1.values, g2.values)
            )
        )
    return Hfe(tuple(_prob_sum(a, b) for a, b in zip(g1.values, g2.values)))


def _dedup_degrees(values) -> tuple[float, ...]:
    kept: list[float] = []
    for value in sorted(values):
        if kept and abs(value - kept[-1]) <= EQUALITY_TOLERANCE:
            continue
        kept.append(value)
    return tuple(kept)


def gv_score(g: GValue) -> float:
    """Score used to order G-type values."""

    if isinstance(g, Crisp):
        return g.m
    if isinstance(g, Tfn):
        return (g.a1 + g.a2 + g.a3) / 3
    if isinstance(g, Hfe):
        return sum(g.values) / len(g.values)
    return g.hesitancy


def gv_compare(g1: GValue, g2: GValue) -> Comparison:
    difference = gv_score(g1) - gv_score(g2)
    if abs(difference) <= EQUALITY_TOLERANCE:
        return Comparison.EQUIVALENT
    return Comparison.SUCCEEDS if difference > 0 else Comparison.PRECEDES


def gv_equal(g1: GValue, g2: GValue, *, tol: float = EQUALITY_TOLERANCE) -> bool:
    """Component-wise equality within ``tol``; variants and shapes must match."""

    if g1.kind is not g2.kind:
        return False
    left, right = g1.degrees(), g2.degrees()
    if len(left) != len(right):
        return False
    return all(abs(a - b) <= tol for a, b in zip(left, right))
