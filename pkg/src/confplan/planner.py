"""
Motion planner with 2k - 1 local rules on F(R^n, k).

Recipe for a pair (x, y):
1. p = largest first coordinate over all 2k points.
2. Q_x moves x by straight lines onto the vertical line X = p + 1, level by level.
3. Q_y does the same for y on the line X = p + 2.
4. alpha moves the stack of x across the strip onto the stack of y.
5. The plan is Q_x . alpha . Q_y^-1.

The rule is continuous on every product of strata, hence on every domain F_i.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .config_space import (
    Configuration,
    StratumId,
    domain_index,
    partition_of,
    sort_permutation,
    stratum_of,
)
from .errors import ArgumentError, StrategyError
from .piecewise import PiecewisePath, concatenate

logger = logging.getLogger(__name__)

# time shares of approach, transfer and reversed approach inside one plan
PHASE_WEIGHTS = (1.0, 2.0, 1.0)


class StackStrategy(str, Enum):
    """How the lowest level is laid out on the target line."""

    DISTANCE = "distance"
    RANK = "rank"

    @classmethod
    def default_for(cls, dim: int) -> "StackStrategy":
        # distances to the rightmost point can tie on a level of R^n, n > 2
        return cls.DISTANCE if dim == 2 else cls.RANK


class TransferMode(str, Enum):
    SEQUENTIAL = "sequential"
    SIMULTANEOUS = "simultaneous"


@dataclass(frozen=True)
class PlanResult:
    path: PiecewisePath
    domain: int
    strata: tuple[StratumId, StratumId]
    line_abscissas: tuple[float, float]


def _check_pair(x: Configuration, y: Configuration) -> None:
    if not x.same_shape(y):
        raise ArgumentError(
            f"Configurations differ in shape: k={x.k}, n={x.dim} vs k={y.k}, n={y.dim}"
        )


def p_line(x: Configuration, y: Configuration) -> float:
    """Largest first coordinate over the 2k points of x and y."""
    _check_pair(x, y)
    return float(max(x.points[:, 0].max(), y.points[:, 0].max()))


def _rank_heights(size: int, top: float, floor: float) -> list[float]:
    """Heights top - (size - j)(top - floor) / (2(size - 1)), j = 1..size."""
    if size == 1:
        return [top]
    step = (top - floor) / (2 * (size - 1))
    return [top - (size - j) * step for j in range(1, size + 1)]


def line_targets(
    x: Configuration, abscissa: float, strategy: StackStrategy
) -> Configuration:
    """
    Stack x on the line through (abscissa, 0, ..., 0) parallel to the last axis.

    Level j (j >= 2) lands in ((h_{j-1} + h_j) / 2, h_j], level 1 at or below h_1,
    and inside a level the lexicographic order becomes the height order.

    Raises:
        ArgumentError: If a point lies beyond the line.
        StrategyError: If the distance strategy produced tied heights, or the
            rank heights of a level round together in floating point.
    """
    if abscissa < x.points[:, 0].max():
        raise ArgumentError(
            f"Target line X={abscissa} must not lie left of the configuration"
        )
    order = sort_permutation(x).indices
    partition, heights = partition_of(x)

    targets = np.zeros_like(x.points)
    targets[:, 0] = abscissa
    for level, (start, size) in enumerate(zip(partition.offsets(), partition.parts)):
        members = order[start : start + size]
        top = heights[level]
        if level == 0 and strategy is StackStrategy.DISTANCE:
            rightmost = x.points[members[-1]]
            levels = [
                top - float(np.linalg.norm(x.points[m] - rightmost)) for m in members
            ]
        else:
            floor = heights[level - 1] if level > 0 else top - 2.0
            levels = _rank_heights(size, top, floor)
        for member, height in zip(members, levels):
            targets[member, -1] = height

    if np.unique(targets[:, -1]).size != x.k:
        if strategy is StackStrategy.RANK:
            raise StrategyError(
                f"Level heights near {float(np.abs(heights.heights).max()):g} are "
                "closer than float resolution allows for the stacked points"
            )
        raise StrategyError(
            f"Strategy {strategy.value!r} gave tied heights; "
            f"use 'rank' in dimension {x.dim}"
        )
    return Configuration(x.dim, targets)


def approach_path(
    x: Configuration, abscissa: float, strategy: StackStrategy
) -> PiecewisePath:
    """Simultaneous straight-line motion from x onto its stack on the line."""
    stacked = line_targets(x, abscissa, strategy)
    return PiecewisePath.from_pairs([(0.0, x), (1.0, stacked)])


def _line_abscissa(config: Configuration) -> float:
    column = config.points[:, 0]
    if not np.all(column == column[0]):
        raise ArgumentError(
            "Transfer endpoints must lie on a line parallel to the last axis"
        )
    return float(column[0])


def transfer_path(
    from_cfg: Configuration,
    to_cfg: Configuration,
    mode: TransferMode = TransferMode.SEQUENTIAL,
) -> PiecewisePath:
    """
    Carry a stacked configuration across the strip onto another stacked one.

    Sequential mode moves one label per slice, in the lexicographic order of
    from_cfg; the moving point stays strictly inside the open strip while the
    others rest on its boundary lines. Simultaneous mode moves all labels at
    once and collides whenever the two stacks order the labels differently.
    """
    _check_pair(from_cfg, to_cfg)
    if _line_abscissa(from_cfg) == _line_abscissa(to_cfg):
        raise ArgumentError("Transfer needs two distinct parallel lines")
    if mode is TransferMode.SIMULTANEOUS:
        return PiecewisePath.from_pairs([(0.0, from_cfg), (1.0, to_cfg)])

    k = from_cfg.k
    current = from_cfg.points.copy()
    pairs: list[tuple[float, Configuration]] = [(0.0, from_cfg)]
    for step, label in enumerate(sort_permutation(from_cfg).indices, start=1):
        current[label] = to_cfg.points[label]
        if step == k:
            pairs.append((1.0, to_cfg))
        else:
            pairs.append((step / k, Configuration(from_cfg.dim, current.copy())))
    return PiecewisePath.from_pairs(pairs)


def plan(
    x: Configuration,
    y: Configuration,
    strategy: StackStrategy | None = None,
    mode: TransferMode = TransferMode.SEQUENTIAL,
) -> PlanResult:
    """Path Q_x . alpha . Q_y^-1 from x to y, with its domain index and strata."""
    _check_pair(x, y)
    strategy = strategy or StackStrategy.default_for(x.dim)
    p = p_line(x, y)
    first_line, second_line = p + 1.0, p + 2.0

    q_x = approach_path(x, first_line, strategy)
    q_y = approach_path(y, second_line, strategy)
    alpha = transfer_path(q_x.end, q_y.end, mode)
    path = concatenate([q_x, alpha, q_y.reversed()], PHASE_WEIGHTS)

    result = PlanResult(
        path=path,
        domain=domain_index(x, y),
        strata=(stratum_of(x), stratum_of(y)),
        line_abscissas=(first_line, second_line),
    )
    logger.debug(
        "Planned k=%d n=%d in F_%d via lines X=%s and X=%s",
        x.k,
        x.dim,
        result.domain,
        first_line,
        second_line,
    )
    return result


def plan_multi(
    waypoints: Sequence[Configuration],
    strategy: StackStrategy | None = None,
    mode: TransferMode = TransferMode.SEQUENTIAL,
) -> PiecewisePath:
    """Chain plans through every waypoint, each leg getting an equal time share."""
    if len(waypoints) < 2:
        raise ArgumentError("Multi-waypoint planning needs at least two waypoints")
    legs = [
        plan(a, b, strategy=strategy, mode=mode).path
        for a, b in zip(waypoints, waypoints[1:])
    ]
    return concatenate(legs)
