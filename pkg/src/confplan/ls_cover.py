"""
Categorical cover W_1, ..., W_k of F(R^n, k) by level count.

W_i collects the configurations with exactly i levels. Each W_i contracts
inside F(R^n, k) onto one labeled base configuration: stack onto a line as the
planner does, spread the stack to heights 0..k-1, slide it to the line X = 1
and carry it label by label onto the base on the last axis.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .config_space import Configuration, level_count, sort_permutation
from .errors import ArgumentError
from .piecewise import PiecewisePath, concatenate
from .planner import StackStrategy, TransferMode, approach_path, p_line, transfer_path

# approach, spread, slide, label-by-label transfer
CONTRACTION_WEIGHTS = (1.0, 1.0, 1.0, 2.0)


@dataclass(frozen=True)
class CoverIndex:
    i: int
    k: int

    def __post_init__(self) -> None:
        if not 1 <= self.i <= self.k:
            raise ArgumentError(f"Cover index must lie in 1..{self.k}, got {self.i}")

    def __int__(self) -> int:
        return self.i


def cover_index(x: Configuration) -> CoverIndex:
    """The cover set W_i holding x: i is the number of levels of x."""
    return CoverIndex(level_count(x), x.k)


def canonical_base(n: int, k: int) -> Configuration:
    """k points on the last axis at heights 0, 1, ..., k - 1."""
    if n < 2 or k < 1:
        raise ArgumentError(f"Need n >= 2 and k >= 1, got n={n}, k={k}")
    points = np.zeros((k, n))
    points[:, -1] = np.arange(k, dtype=np.float64)
    return Configuration(n, points)


def contraction_path(
    x: Configuration, strategy: StackStrategy | None = None
) -> PiecewisePath:
    """Collision-free path from x to canonical_base(n, k)."""
    strategy = strategy or StackStrategy.default_for(x.dim)
    approach = approach_path(x, p_line(x, x) + 1.0, strategy)
    stacked = approach.end

    spread = stacked.points.copy()
    order = list(sort_permutation(stacked).indices)
    spread[order, -1] = np.arange(x.k, dtype=np.float64)
    spread_cfg = Configuration(x.dim, spread)

    slid = spread.copy()
    slid[:, 0] = 1.0
    slid_cfg = Configuration(x.dim, slid)

    legs = [
        approach,
        PiecewisePath.from_pairs([(0.0, stacked), (1.0, spread_cfg)]),
        PiecewisePath.from_pairs([(0.0, spread_cfg), (1.0, slid_cfg)]),
        transfer_path(slid_cfg, canonical_base(x.dim, x.k), TransferMode.SEQUENTIAL),
    ]
    return concatenate(legs, CONTRACTION_WEIGHTS)
