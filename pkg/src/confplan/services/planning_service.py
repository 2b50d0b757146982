"""
Planning service: classification, planning, multi-waypoint planning and
contraction onto the base configuration.

Pattern: Service Layer (Layer 2)
- Resolves strategy and transfer mode from the injected configuration
- Delegates geometry to config_space, planner and ls_cover
- Re-checks endpoint exactness when strict_endpoints is set

Architecture: CLI → Service → planner / ls_cover
"""

from __future__ import annotations

import logging
from collections.abc import Sequence

from ..config import ConfplanConfig
from ..config_space import Configuration, StratumId, partition_of, stratum_of
from ..errors import InvariantError
from ..ls_cover import canonical_base, contraction_path, cover_index
from ..piecewise import PiecewisePath
from ..planner import PlanResult, plan, plan_multi

logger = logging.getLogger(__name__)


def stratum_payload(stratum: StratumId) -> dict:
    return {
        "partition": list(stratum.partition.parts),
        "permutation": list(stratum.order.mapping),
    }


class PlanningService:
    """
    Runs the planner under one configuration.

    Follows Pattern #3 (Dependency Injection):
    - Configuration injected via constructor
    - Strategy and mode pinned in tests without touching the environment

    Follows Pattern #4 (Separation of Concerns):
    - Chooses settings and checks endpoints
    - Delegates geometry (to planner and ls_cover)
    - Returns domain results or structured data
    """

    def __init__(self, config: ConfplanConfig):
        """
        Initialize planning service.

        Args:
            config: Settings providing strategy, transfer mode and strictness
        """
        self.config = config

    def _check_endpoints(
        self, path: PiecewisePath, start: Configuration, end: Configuration
    ) -> None:
        if self.config.strict_endpoints and (path.start != start or path.end != end):
            raise InvariantError("Planned path does not start and end at its inputs")

    def classify(self, x: Configuration) -> dict:
        """
        Stratum, level heights and level count of a configuration.

        Args:
            x: Configuration to classify

        Returns:
            Dictionary with k, dim, partition, 1-based permutation, heights,
            level count and whether x is already in lexicographic order
        """
        stratum = stratum_of(x)
        _, heights = partition_of(x)
        return {
            "k": x.k,
            "dim": x.dim,
            **stratum_payload(stratum),
            "heights": list(heights.heights),
            "levels": stratum.partition.levels,
            "ordered": stratum.order.is_identity,
        }

    def plan(self, x: Configuration, y: Configuration) -> PlanResult:
        """
        Plan a collision-free path from x to y.

        Args:
            x: Start configuration
            y: Goal configuration with the same k and dimension

        Returns:
            Plan result with the path, domain index, strata and planner lines

        Raises:
            InvariantError: If strict endpoints are on and the path misses x or y.
        """
        result = plan(
            x,
            y,
            strategy=self.config.strategy_for(x.dim),
            mode=self.config.transfer_mode,
        )
        self._check_endpoints(result.path, x, y)
        logger.info(
            "Planned k=%d n=%d: domain F_%d, strata %s -> %s",
            x.k,
            x.dim,
            result.domain,
            result.strata[0].partition.parts,
            result.strata[1].partition.parts,
        )
        return result

    def plan_multi(self, waypoints: Sequence[Configuration]) -> PiecewisePath:
        """
        Plan through every waypoint in order.

        Args:
            waypoints: At least two configurations sharing k and dimension

        Returns:
            One path visiting the waypoints at equally spaced times
        """
        path = plan_multi(
            waypoints,
            strategy=self.config.strategy_for(waypoints[0].dim) if waypoints else None,
            mode=self.config.transfer_mode,
        )
        self._check_endpoints(path, waypoints[0], waypoints[-1])
        logger.info("Planned through %d waypoints", len(waypoints))
        return path

    def contract(self, x: Configuration) -> PiecewisePath:
        """
        Contract x onto the base configuration of its shape.

        Args:
            x: Configuration to contract

        Returns:
            Collision-free path ending exactly at canonical_base(n, k)
        """
        path = contraction_path(x, strategy=self.config.strategy_for(x.dim))
        self._check_endpoints(path, x, canonical_base(x.dim, x.k))
        logger.info("Contracted k=%d n=%d onto the base configuration", x.k, x.dim)
        return path

    def cover(self, x: Configuration) -> dict:
        """
        Index of the cover set containing x.

        Args:
            x: Configuration to locate

        Returns:
            Dictionary with k, dim and the cover index (its level count)
        """
        index = cover_index(x)
        return {"k": x.k, "dim": x.dim, "cover_index": index.i}

    @staticmethod
    def plan_summary(result: PlanResult) -> dict:
        """
        JSON-ready summary of a plan result.

        Args:
            result: Output of plan()

        Returns:
            Dictionary with domain, strata, line abscissas and breakpoint count
        """
        return {
            "domain": result.domain,
            "strata": [stratum_payload(s) for s in result.strata],
            "line_abscissas": list(result.line_abscissas),
            "breakpoints": len(result.path.breakpoints),
        }
