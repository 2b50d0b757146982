"""
Verification service for planned and user-supplied paths.

Pattern: Service Layer (Layer 2)
- Applies the configured collision tolerance and fan-out width
- Returns domain reports plus JSON-ready summaries
- No argument parsing or file handling

Architecture: CLI → Service → collision
"""

from __future__ import annotations

import logging
from collections.abc import Sequence

from ..collision import CollisionReport, verify_many, verify_path
from ..config import ConfplanConfig
from ..piecewise import PiecewisePath

logger = logging.getLogger(__name__)


class VerificationService:
    """
    Exact collision checks under one configuration.

    Follows Pattern #3 (Dependency Injection):
    - Configuration injected via constructor
    - Tolerance and worker count pinned per instance in tests
    """

    def __init__(self, config: ConfplanConfig):
        """
        Initialize verification service.

        Args:
            config: Settings providing collision_eps and workers
        """
        self.config = config

    def verify(self, path: PiecewisePath) -> CollisionReport:
        """
        Check every segment of one path.

        Args:
            path: Piecewise-linear motion to check

        Returns:
            Collision report with witnesses and minimum clearance
        """
        report = verify_path(path, eps=self.config.collision_eps)
        logger.info(
            "Verified %d segment(s) of k=%d: colliding=%s clearance=%s",
            path.segment_count,
            path.k,
            report.colliding,
            report.min_clearance,
        )
        return report

    def verify_many(self, paths: Sequence[PiecewisePath]) -> list[CollisionReport]:
        """
        Check several paths, fanning out over the configured worker count.

        Args:
            paths: Paths to check

        Returns:
            One report per path, in input order
        """
        reports = verify_many(
            paths, eps=self.config.collision_eps, workers=self.config.workers
        )
        logger.info(
            "Verified %d path(s) with %d worker(s): %d colliding",
            len(reports),
            self.config.workers,
            sum(r.colliding for r in reports),
        )
        return reports

    def summary(self, path: PiecewisePath) -> dict:
        """
        Verification report plus the path's shape, ready for JSON output.

        Args:
            path: Path to check

        Returns:
            Dictionary with k, dim, breakpoints, eps and the report fields
        """
        report = self.verify(path)
        return {
            "k": path.k,
            "dim": path.dim,
            "breakpoints": len(path.breakpoints),
            "eps": self.config.collision_eps,
            **report.to_dict(),
        }
