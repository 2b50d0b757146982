"""Runtime configuration for confplan, read from CONFPLAN_* environment variables."""

from __future__ import annotations

import logging
import math
import os
from dataclasses import dataclass

from .planner import StackStrategy, TransferMode

logger = logging.getLogger(__name__)

DEFAULT_EPS = 1e-12
DEFAULT_SVG_SAMPLES = 16
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


def get_bool(key: str, default: bool = False) -> bool:
    """Parse a boolean flag using the true/1/yes/on and false/0/no/off vocabulary."""
    value = os.getenv(key, "").lower()
    if value in ("true", "1", "yes", "on"):
        return True
    if value in ("false", "0", "no", "off"):
        return False
    return default


def _get_positive_int(key: str, default: int) -> int:
    raw = os.getenv(key)
    if raw is None:
        return default
    try:
        value = int(raw)
    except ValueError:
        logger.warning("Ignoring %s=%r: not an integer", key, raw)
        return default
    if value < 1:
        logger.warning("Ignoring %s=%r: must be >= 1", key, raw)
        return default
    return value


@dataclass
class ConfplanConfig:  # pylint: disable=too-many-instance-attributes
    """
    Effective settings for planning, verification and reporting.

    Environment variables:
    - CONFPLAN_EPS=1e-12 (absolute zero-test tolerance of the collision verifier)
    - CONFPLAN_STACK_STRATEGY=distance|rank (default: distance for n=2, rank otherwise)
    - CONFPLAN_TRANSFER_MODE=sequential|simultaneous (default: sequential)
    - CONFPLAN_SVG_SAMPLES=16 (interpolation samples per path segment in SVG traces)
    - CONFPLAN_WORKERS=1 (batch verification fan-out)
    - CONFPLAN_LOG_LEVEL=WARNING
    - CONFPLAN_STRICT_ENDPOINTS=true (services re-check endpoint exactness)
    """

    collision_eps: float = DEFAULT_EPS
    stack_strategy: StackStrategy | None = None
    transfer_mode: TransferMode = TransferMode.SEQUENTIAL
    svg_samples: int = DEFAULT_SVG_SAMPLES
    workers: int = 1
    log_level: str = "WARNING"
    strict_endpoints: bool = True

    @classmethod
    def from_env(cls) -> "ConfplanConfig":
        """
        Create configuration from environment variables.

        Invalid values never abort: they are logged and the default is kept.
        """
        eps = DEFAULT_EPS
        raw_eps = os.getenv("CONFPLAN_EPS")
        if raw_eps is not None:
            try:
                parsed = float(raw_eps)
            except ValueError:
                parsed = math.nan
            if math.isfinite(parsed) and parsed >= 0:
                eps = parsed
            else:
                logger.warning(
                    "Ignoring CONFPLAN_EPS=%r: not a finite value >= 0", raw_eps
                )

        strategy_name = os.getenv("CONFPLAN_STACK_STRATEGY", "").lower()
        strategy = (
            StackStrategy(strategy_name)
            if strategy_name in {s.value for s in StackStrategy}
            else None
        )

        mode_name = os.getenv("CONFPLAN_TRANSFER_MODE", "sequential").lower()
        if mode_name not in {m.value for m in TransferMode}:
            mode_name = TransferMode.SEQUENTIAL.value

        log_level = os.getenv("CONFPLAN_LOG_LEVEL", "WARNING").upper()
        if log_level not in LOG_LEVELS:
            log_level = "WARNING"

        return cls(
            collision_eps=eps,
            stack_strategy=strategy,
            transfer_mode=TransferMode(mode_name),
            svg_samples=_get_positive_int("CONFPLAN_SVG_SAMPLES", DEFAULT_SVG_SAMPLES),
            workers=_get_positive_int("CONFPLAN_WORKERS", 1),
            log_level=log_level,
            strict_endpoints=get_bool("CONFPLAN_STRICT_ENDPOINTS", True),
        )

    def strategy_for(self, dim: int) -> StackStrategy:
        """Stacking strategy for a given ambient dimension."""
        if self.stack_strategy is not None:
            return self.stack_strategy
        return StackStrategy.default_for(dim)

    def describe(self) -> dict[str, object]:
        """JSON-ready summary of the effective settings."""
        return {
            "collision_eps": self.collision_eps,
            "stack_strategy": (
                self.stack_strategy.value if self.stack_strategy else "auto"
            ),
            "transfer_mode": self.transfer_mode.value,
            "svg_samples": self.svg_samples,
            "workers": self.workers,
            "log_level": self.log_level,
            "strict_endpoints": self.strict_endpoints,
        }
