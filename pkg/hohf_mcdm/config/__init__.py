"""Static configuration shipped with the codebase."""

# Numeric defaults live in a dedicated module so services and CLI share them.
from .defaults import (
    DEFAULT_COMBINE_POLICY,
    DEFAULT_DISTANCE_METRIC,
    DEFAULT_HFE_CROSS_PRODUCT,
    DEFAULT_INTU_SCALING,
    DEFAULT_OUTPUT_FORMAT,
    DEFAULT_RHO_SIGN,
    DEFAULT_VALIDATION_MODE,
    DEFAULT_WORKERS,
    EQUALITY_TOLERANCE,
    NORMALIZATION_TOLERANCE,
    REPORT_DECIMALS,
    SUM_TOLERANCE,
)

__all__ = [
    "DEFAULT_COMBINE_POLICY",
    "DEFAULT_DISTANCE_METRIC",
    "DEFAULT_HFE_CROSS_PRODUCT",
    "DEFAULT_INTU_SCALING",
    "DEFAULT_OUTPUT_FORMAT",
    "DEFAULT_RHO_SIGN",
    "DEFAULT_VALIDATION_MODE",
    "DEFAULT_WORKERS",
    "EQUALITY_TOLERANCE",
    "NORMALIZATION_TOLERANCE",
    "REPORT_DECIMALS",
    "SUM_TOLERANCE",
]
