"""Time-stamped piecewise-linear motions of labeled point configurations."""

from __future__ import annotations

import bisect
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

import numpy as np

from .config_space import Configuration
from .errors import PathStructureError


@dataclass(frozen=True)
class Breakpoint:
    time: float
    config: Configuration


@dataclass(frozen=True, eq=False)
class PiecewisePath:
    """
    Motion through a sequence of configurations, linear between breakpoints.

    Times run strictly increasing from exactly 0 to exactly 1 and every
    breakpoint shares k and n. Evaluating at a breakpoint time returns that
    breakpoint's coordinates bit-for-bit.
    """

    breakpoints: tuple[Breakpoint, ...]

    def __post_init__(self) -> None:
        breakpoints = tuple(self.breakpoints)
        if len(breakpoints) < 2:
            raise PathStructureError("A path needs at least two breakpoints")
        times = [float(b.time) for b in breakpoints]
        if times[0] != 0.0 or times[-1] != 1.0:
            raise PathStructureError(
                "Path times must start at 0 and end at 1, "
                f"got {times[0]} .. {times[-1]}"
            )
        if any(b <= a for a, b in zip(times, times[1:])):
            raise PathStructureError("Path times must be strictly increasing")
        first = breakpoints[0].config
        for bp in breakpoints[1:]:
            if not bp.config.same_shape(first):
                raise PathStructureError(
                    "All breakpoints must share the number of points and the dimension"
                )
        object.__setattr__(self, "breakpoints", breakpoints)

    @classmethod
    def from_pairs(
        cls, pairs: Iterable[tuple[float, Configuration]]
    ) -> "PiecewisePath":
        return cls(tuple(Breakpoint(float(t), c) for t, c in pairs))

    @classmethod
    def constant(cls, config: Configuration) -> "PiecewisePath":
        return cls.from_pairs([(0.0, config), (1.0, config)])

    @property
    def times(self) -> list[float]:
        return [b.time for b in self.breakpoints]

    @property
    def configs(self) -> list[Configuration]:
        return [b.config for b in self.breakpoints]

    @property
    def start(self) -> Configuration:
        return self.breakpoints[0].config

    @property
    def end(self) -> Configuration:
        return self.breakpoints[-1].config

    @property
    def k(self) -> int:
        return self.start.k

    @property
    def dim(self) -> int:
        return self.start.dim

    @property
    def segment_count(self) -> int:
        return len(self.breakpoints) - 1

    def segments(self) -> list[tuple[Configuration, Configuration]]:
        configs = self.configs
        return list(zip(configs, configs[1:]))

    def positions(self, t: float) -> np.ndarray:
        """Coordinates of every labeled point at time t, shape (k, n)."""
        if not 0.0 <= t <= 1.0:
            raise PathStructureError(f"Time {t} outside [0, 1]")
        times = self.times
        index = bisect.bisect_left(times, t)
        if index < len(times) and times[index] == t:
            return self.breakpoints[index].config.points.copy()
        left, right = self.breakpoints[index - 1], self.breakpoints[index]
        s = (t - left.time) / (right.time - left.time)
        return (1.0 - s) * left.config.points + s * right.config.points

    def sample(self, count: int) -> np.ndarray:
        """Positions at `count` uniform times, both ends included: (count, k, n)."""
        if count < 2:
            raise PathStructureError("Sampling needs at least two samples")
        times = np.linspace(0.0, 1.0, count)
        return np.stack([self.positions(float(t)) for t in times])

    def reversed(self) -> "PiecewisePath":
        """The inverse path, traversed with t -> 1 - t."""
        flipped = reversed(self.breakpoints)
        return PiecewisePath(tuple(Breakpoint(1.0 - b.time, b.config) for b in flipped))


def concatenate(
    paths: Sequence[PiecewisePath], weights: Sequence[float] | None = None
) -> PiecewisePath:
    """
    Join paths end to start, giving path m the time share weights[m] / sum(weights).

    Raises:
        PathStructureError: If consecutive paths do not meet exactly.
    """
    if not paths:
        raise PathStructureError("Nothing to concatenate")
    shares = [1.0] * len(paths) if weights is None else [float(w) for w in weights]
    if len(shares) != len(paths) or any(w <= 0 for w in shares):
        raise PathStructureError("Need one positive weight per path")
    total = sum(shares)

    breakpoints: list[Breakpoint] = []
    start = 0.0
    for position, (path, share) in enumerate(zip(paths, shares)):
        width = share / total
        if position > 0 and path.start != breakpoints[-1].config:
            raise PathStructureError(
                f"Path {position} does not start where path {position - 1} ends"
            )
        items = path.breakpoints if position == 0 else path.breakpoints[1:]
        for bp in items:
            breakpoints.append(Breakpoint(start + bp.time * width, bp.config))
        start += width
    last = breakpoints[-1]
    breakpoints[-1] = Breakpoint(1.0, last.config)
    return PiecewisePath(tuple(breakpoints))


def sup_distance(
    first: PiecewisePath, second: PiecewisePath, samples: int = 257
) -> float:
    """Largest pointwise distance over a time grid plus every breakpoint."""
    if not first.start.same_shape(second.start):
        raise PathStructureError("Paths move configurations of different shapes")
    grid = set(np.linspace(0.0, 1.0, samples).tolist())
    grid.update(first.times)
    grid.update(second.times)
    worst = 0.0
    for t in sorted(grid):
        gap = np.linalg.norm(first.positions(t) - second.positions(t), axis=1).max()
        worst = max(worst, float(gap))
    return worst
