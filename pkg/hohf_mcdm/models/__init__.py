"""Shared option types and records for the HOHF decision pipeline."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Any


class _Choice(str, Enum):
    """String enum that can be parsed from CLI flags and env values."""

    @classmethod
    def values(cls) -> set[str]:
        return {entry.value for entry in cls}

    @classmethod
    def parse(cls, raw: "str | _Choice") -> "_Choice":
        """Accept a member, its value, or its name (case-insensitive)."""

        if isinstance(raw, cls):
            return raw
        candidate = str(raw).strip().lower()
        for entry in cls:
            if candidate in (entry.value, entry.name.lower()):
                return entry
        allowed = ", ".join(sorted(cls.values()))
        raise ValueError(f"invalid {cls.__name__} {raw!r}; expected one of {allowed}")


class ValidationMode(_Choice):
    """How strictly degrees and measures are checked."""

    STRICT = "strict"
    LENIENT = "lenient"


class CombinePolicy(_Choice):
    """How mixed G-type variants are combined inside a HOHFE."""

    TYPEWISE = "typewise"
    STRICT_UNIFORM = "strict-uniform"


class DistanceMetric(_Choice):
    """Distance between dominance vectors."""

    L1 = "l1"
    MAXMIN = "maxmin"


class OutputFormat(_Choice):
    TABLE = "table"
    JSON = "json"


class IntuScaling(_Choice):
    """Scalar multiplication rule for intuitionistic pairs."""

    EXAMPLE = "example"
    PRINTED = "printed"


class RhoSign(_Choice):
    """Sign of the interaction term in the rho-rule recurrence."""

    MINUS = "minus"
    PLUS = "plus"


class GValueKind(_Choice):
    CRISP = "crisp"
    TFN = "tfn"
    HFE = "hfe"
    IFS = "ifs"


class Comparison(_Choice):
    """Outcome of comparing a left operand against a right operand."""

    PRECEDES = "precedes"
    EQUIVALENT = "equivalent"
    SUCCEEDS = "succeeds"


class MeasureClass(_Choice):
    ADDITIVE = "additive"
    SUBADDITIVE = "subadditive"
    SUPERADDITIVE = "superadditive"
    GENERAL = "general"


class MatrixKind(_Choice):
    INDIVIDUAL = "individual"
    COLLECTIVE = "collective"


@dataclass(frozen=True, slots=True)
class ReportWarning:
    """Machine-readable warning attached to a report.

    ``subject`` names the offending subset, cell, alternative or technique.
    """

    code: str
    message: str
    subject: dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        return {"code": self.code, "message": self.message, "subject": self.subject}
