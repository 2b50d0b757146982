"""
Exact collision verification for piecewise-linear multi-point motions.

Within one segment every point moves linearly, so the difference of a pair is
d(t) = d0 + t (d1 - d0). The pair collides iff d(t) vanishes for some t in
[0, 1], and its clearance is the minimum of |d(t)|, a convex quadratic
minimised in closed form. All pairs of a segment are handled as one batch.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .config_space import Configuration
from .errors import ArgumentError, ConfigurationError, PathStructureError
from .piecewise import PiecewisePath

logger = logging.getLogger(__name__)

DEFAULT_EPS = 1e-12


@dataclass(frozen=True)
class CollisionWitness:
    """Pair (i, j) (0-based labels) coincides at local time t of segment `segment`."""

    segment: int
    pair: tuple[int, int]
    time: float


@dataclass(frozen=True)
class CollisionReport:
    colliding: bool
    witnesses: tuple[CollisionWitness, ...] = field(default_factory=tuple)
    min_clearance: float = math.inf
    segments: int = 1

    def merge(
        self, other: "CollisionReport", segment_offset: int = 0
    ) -> "CollisionReport":
        """Combine with a report about later segments, shifting its segment indices."""
        shifted = tuple(
            CollisionWitness(w.segment + segment_offset, w.pair, w.time)
            for w in other.witnesses
        )
        return CollisionReport(
            colliding=self.colliding or other.colliding,
            witnesses=self.witnesses + shifted,
            min_clearance=min(self.min_clearance, other.min_clearance),
            segments=self.segments + other.segments,
        )

    def to_dict(self) -> dict:
        return {
            "colliding": self.colliding,
            "min_clearance": (
                self.min_clearance if math.isfinite(self.min_clearance) else None
            ),
            "segments": self.segments,
            "witnesses": [
                {
                    "segment": w.segment,
                    "labels": [w.pair[0] + 1, w.pair[1] + 1],
                    "t": w.time,
                }
                for w in self.witnesses
            ],
        }


def _pair_differences(
    c0: Configuration, c1: Configuration
) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    if not c0.same_shape(c1):
        raise ArgumentError(
            "Segment endpoints differ in shape: "
            f"k={c0.k}, n={c0.dim} vs k={c1.k}, n={c1.dim}"
        )
    first, second = np.triu_indices(c0.k, k=1)
    d0 = c0.points[second] - c0.points[first]
    d1 = c1.points[second] - c1.points[first]
    return first, second, d0, d1


def _closest_approach(d0: np.ndarray, d1: np.ndarray) -> np.ndarray:
    """Per pair minimum over t in [0, 1] of |d0 + t (d1 - d0)|."""
    e = d1 - d0
    ee = np.einsum("ij,ij->i", e, e)
    de = np.einsum("ij,ij->i", d0, e)
    t = np.zeros_like(ee)
    moving = ee > 0
    t[moving] = np.clip(-de[moving] / ee[moving], 0.0, 1.0)
    return np.linalg.norm(d0 + t[:, None] * e, axis=1)


def _crossings(
    d0: np.ndarray, d1: np.ndarray, eps: float
) -> tuple[np.ndarray, np.ndarray]:
    """
    Per pair: whether d(t) vanishes on [0, 1], and the crossing time.

    The crossing parameter t* = d0_c / (d0_c - d1_c) is taken from the coordinate
    with the largest change; every coordinate must then vanish at t*. A pair
    whose difference does not change must coincide at t = 0.
    """
    e = d1 - d0
    rows = np.arange(e.shape[0])
    axis = np.argmax(np.abs(e), axis=1)
    pivot = e[rows, axis]
    moving = np.abs(pivot) > eps

    t = np.zeros(e.shape[0])
    t[moving] = -d0[rows[moving], axis[moving]] / pivot[moving]
    in_range = ~moving | ((t >= -eps) & (t <= 1.0 + eps))
    t = np.clip(t, 0.0, 1.0)
    residual = np.abs(d0 + t[:, None] * e).max(axis=1)
    hit = in_range & (residual <= eps)
    return hit, t


def segment_collision(
    c0: Configuration, c1: Configuration, eps: float = DEFAULT_EPS, segment: int = 0
) -> CollisionReport:
    """
    Check the simultaneous linear motion c0 -> c1 for coinciding points.

    Raises:
        ArgumentError: If c0 and c1 differ in k or n.
    """
    first, second, d0, d1 = _pair_differences(c0, c1)
    if first.size == 0:
        return CollisionReport(colliding=False)
    hit, t = _crossings(d0, d1, eps)
    clearance = _closest_approach(d0, d1)
    clearance[hit] = 0.0
    witnesses = tuple(
        CollisionWitness(segment, (int(first[m]), int(second[m])), float(t[m]))
        for m in np.flatnonzero(hit)
    )
    return CollisionReport(
        colliding=bool(hit.any()),
        witnesses=witnesses,
        min_clearance=float(clearance.min()),
    )


def min_pair_clearance(c0: Configuration, c1: Configuration) -> float:
    """Minimum over pairs and t in [0, 1] of the distance between moving points."""
    first, _, d0, d1 = _pair_differences(c0, c1)
    if first.size == 0:
        return math.inf
    return float(_closest_approach(d0, d1).min())


def verify_path(path: PiecewisePath, eps: float = DEFAULT_EPS) -> CollisionReport:
    """
    Verify every segment of a path and merge the findings.

    Raises:
        PathStructureError: If the path or one of its breakpoints is malformed.
    """
    if not isinstance(path, PiecewisePath):
        raise PathStructureError(f"Expected a PiecewisePath, got {type(path).__name__}")
    for index, config in enumerate(path.configs):
        try:
            Configuration(config.dim, config.points)
        except ConfigurationError as exc:
            raise PathStructureError(
                f"Breakpoint {index} is not a valid configuration"
            ) from exc

    report: CollisionReport | None = None
    for index, (c0, c1) in enumerate(path.segments()):
        part = segment_collision(c0, c1, eps=eps, segment=index)
        report = part if report is None else report.merge(part)
    assert report is not None
    if report.colliding:
        logger.warning(
            "Path collides: %d witness(es), first at segment %d",
            len(report.witnesses),
            report.witnesses[0].segment,
        )
    return report


def verify_many(
    paths: Sequence[PiecewisePath], eps: float = DEFAULT_EPS, workers: int = 1
) -> list[CollisionReport]:
    """Verify a batch of paths, fanning out over a thread pool when workers > 1."""
    if workers <= 1:
        return [verify_path(p, eps) for p in paths]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda p: verify_path(p, eps), paths))
