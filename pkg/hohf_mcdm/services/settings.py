"""Runtime settings for the pipeline, loaded from the environment."""

from __future__ import annotations

import logging
import os
from dataclasses import dataclass, field

from hohf_mcdm.config import defaults
from hohf_mcdm.models import IntuScaling, RhoSign

logger = logging.getLogger(__name__)

_TRUTHY = {"1", "true", "yes", "on"}
_FALSY = {"0", "false", "no", "off", ""}


@dataclass(frozen=True, slots=True)
class ArithmeticOptions:
    """Knobs that change G-type arithmetic; passed explicitly, never global."""

    intu_scaling: IntuScaling = IntuScaling(defaults.DEFAULT_INTU_SCALING)
    rho_sign: RhoSign = RhoSign(defaults.DEFAULT_RHO_SIGN)
    hfe_cross_product: bool = defaults.DEFAULT_HFE_CROSS_PRODUCT


DEFAULT_ARITHMETIC = ArithmeticOptions()


@dataclass(frozen=True)
class RuntimeSettings:
    """Process-level configuration for the command-line tool."""

    no_warn: bool = False
    workers: int = defaults.DEFAULT_WORKERS
    log_level: str = defaults.DEFAULT_LOG_LEVEL
    arithmetic: ArithmeticOptions = field(default_factory=ArithmeticOptions)

    @classmethod
    def load(cls) -> "RuntimeSettings":
        """Build settings from environment variables with logged fallbacks."""

        return cls(
            no_warn=_load_flag(defaults.ENV_NO_WARN, False),
            workers=_load_workers(),
            log_level=_load_log_level(),
            arithmetic=ArithmeticOptions(
                intu_scaling=_load_choice(
                    defaults.ENV_INTU_SCALING,
                    IntuScaling,
                    IntuScaling(defaults.DEFAULT_INTU_SCALING),
                ),
                rho_sign=_load_choice(
                    defaults.ENV_RHO_SIGN,
                    RhoSign,
                    RhoSign(defaults.DEFAULT_RHO_SIGN),
                ),
                hfe_cross_product=_load_flag(
                    defaults.ENV_HFE_CROSS_PRODUCT,
                    defaults.DEFAULT_HFE_CROSS_PRODUCT,
                ),
            ),
        )


def _load_flag(env_var: str, default: bool) -> bool:
    raw_value = os.environ.get(env_var)
    if raw_value is None:
        return default
    normalized = raw_value.strip().lower()
    if normalized in _TRUTHY:
        return True
    if normalized in _FALSY:
        return False
    logger.warning(
        "Invalid %s=%r; falling back to default %s", env_var, raw_value, default
    )
    return default


def _load_workers() -> int:
    raw_value = os.environ.get(defaults.ENV_WORKERS)
    if raw_value is None:
        return defaults.DEFAULT_WORKERS

    try:
        workers = int(raw_value)
    except ValueError:
        logger.warning(
            "Invalid %s=%r; falling back to default %s",
            defaults.ENV_WORKERS,
            raw_value,
            defaults.DEFAULT_WORKERS,
        )
        return defaults.DEFAULT_WORKERS

    if workers <= 0:
        logger.warning(
            "%s must be positive; got %s. Falling back to default %s",
            defaults.ENV_WORKERS,
            workers,
            defaults.DEFAULT_WORKERS,
        )
        return defaults.DEFAULT_WORKERS
    return workers


def _load_log_level() -> str:
    raw_value = os.environ.get(defaults.ENV_LOG_LEVEL)
    if raw_value is None:
        return defaults.DEFAULT_LOG_LEVEL
    level = raw_value.strip().upper()
    if not isinstance(logging.getLevelName(level), int):
        logger.warning(
            "Invalid %s=%r; falling back to default %s",
            defaults.ENV_LOG_LEVEL,
            raw_value,
            defaults.DEFAULT_LOG_LEVEL,
        )
        return defaults.DEFAULT_LOG_LEVEL
    return level


def _load_choice(env_var, enum_cls, default):
    raw_value = os.environ.get(env_var)
    if raw_value is None:
        return default
    try:
        return enum_cls.parse(raw_value)
    except ValueError:
        logger.warning(
            "Invalid %s=%r; falling back to default %s",
            env_var,
            raw_value,
            default.value,
        )
        return default
