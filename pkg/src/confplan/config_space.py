"""
Configurations of labeled points in R^n and their stratification.

A configuration x = (x_1, ..., x_k) is sorted by the reverse-lexicographic
order (last coordinate first). Sorted points sharing a last coordinate form a
level; the level sizes in ascending height order form the partition A_x, and
together with the sorting permutation sigma_x it names the stratum F_{A, sigma}
that x belongs to. Pairs of configurations are grouped into planning domains
F_i by the total level count |A_x| + |A_y|.

Everything in this module is a pure function on immutable values.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from enum import IntEnum

import numpy as np

from .errors import ArgumentError, ConfigurationError

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class Configuration:
    """
    Ordered tuple of k pairwise-distinct points in R^dim.

    The points are held in a read-only float64 array of shape (k, dim).
    Equality is exact coordinatewise equality.
    """

    dim: int
    points: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        if not isinstance(self.dim, (int, np.integer)) or self.dim < 2:
            raise ConfigurationError(
                f"Ambient dimension must be >= 2, got {self.dim!r}"
            )
        try:
            array = np.array(self.points, dtype=np.float64)
        except (TypeError, ValueError) as exc:
            raise ConfigurationError("Points must be numeric coordinate lists") from exc
        if array.ndim != 2 or array.shape[0] < 1:
            raise ConfigurationError(
                f"Expected a non-empty list of points, got shape {array.shape}"
            )
        if array.shape[1] != self.dim:
            raise ConfigurationError(
                f"Every point needs exactly {self.dim} coordinates, "
                f"got {array.shape[1]}"
            )
        if not np.all(np.isfinite(array)):
            raise ConfigurationError("Coordinates must be finite numbers")
        if np.unique(array, axis=0).shape[0] != array.shape[0]:
            raise ConfigurationError(
                "Points of a configuration must be pairwise distinct"
            )
        array.setflags(write=False)
        object.__setattr__(self, "dim", int(self.dim))
        object.__setattr__(self, "points", array)

    @classmethod
    def from_points(cls, points: Iterable[Sequence[float]]) -> "Configuration":
        """Build a configuration, inferring the dimension from the first point."""
        rows = [list(p) for p in points]
        if not rows:
            raise ConfigurationError("A configuration needs at least one point")
        return cls(dim=len(rows[0]), points=np.array(rows, dtype=np.float64))

    @property
    def k(self) -> int:
        return int(self.points.shape[0])

    def __len__(self) -> int:
        return self.k

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Configuration):
            return NotImplemented
        return self.dim == other.dim and np.array_equal(self.points, other.points)

    def __hash__(self) -> int:
        # + 0.0 folds -0.0 into 0.0, matching array_equal
        return hash((self.dim, (self.points + 0.0).tobytes()))

    def __repr__(self) -> str:
        return f"Configuration(dim={self.dim}, points={self.points.tolist()})"

    @property
    def heights(self) -> np.ndarray:
        """Last coordinate of every point, in label order."""
        return self.points[:, -1]

    def as_lists(self) -> list[list[float]]:
        return self.points.tolist()

    def permuted(self, order: "Permutation") -> "Configuration":
        """The configuration (x_{sigma(1)}, ..., x_{sigma(k)})."""
        if order.k != self.k:
            raise ArgumentError(
                f"Permutation over {order.k} labels, configuration has {self.k}"
            )
        return Configuration(self.dim, self.points[list(order.indices)])

    def translated(self, offset: Sequence[float]) -> "Configuration":
        shift = np.asarray(offset, dtype=np.float64)
        if shift.shape != (self.dim,):
            raise ArgumentError(f"Offset must have {self.dim} coordinates")
        return Configuration(self.dim, self.points + shift)

    def same_shape(self, other: "Configuration") -> bool:
        return self.dim == other.dim and self.k == other.k


@dataclass(frozen=True)
class Permutation:
    """Bijection on {1, ..., k}, stored 1-based as (sigma(1), ..., sigma(k))."""

    mapping: tuple[int, ...]

    def __post_init__(self) -> None:
        mapping = tuple(int(i) for i in self.mapping)
        if sorted(mapping) != list(range(1, len(mapping) + 1)):
            raise ArgumentError(f"Not a permutation of 1..{len(mapping)}: {mapping}")
        object.__setattr__(self, "mapping", mapping)

    @classmethod
    def identity(cls, k: int) -> "Permutation":
        return cls(tuple(range(1, k + 1)))

    @classmethod
    def from_indices(cls, indices: Iterable[int]) -> "Permutation":
        """Build from 0-based indices."""
        return cls(tuple(int(i) + 1 for i in indices))

    @property
    def k(self) -> int:
        return len(self.mapping)

    @property
    def indices(self) -> tuple[int, ...]:
        """0-based image list."""
        return tuple(i - 1 for i in self.mapping)

    @property
    def is_identity(self) -> bool:
        return self.mapping == tuple(range(1, self.k + 1))

    def inverse(self) -> "Permutation":
        inverse = [0] * self.k
        for position, image in enumerate(self.mapping, start=1):
            inverse[image - 1] = position
        return Permutation(tuple(inverse))


@dataclass(frozen=True)
class Partition:
    """Ordered composition (a_1, ..., a_l) of k; l = |A| is the level count."""

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        parts = tuple(int(a) for a in self.parts)
        if not parts or any(a < 1 for a in parts):
            raise ArgumentError(
                f"Partition parts must be positive integers: {self.parts}"
            )
        object.__setattr__(self, "parts", parts)

    @property
    def k(self) -> int:
        return sum(self.parts)

    @property
    def levels(self) -> int:
        return len(self.parts)

    def __len__(self) -> int:
        return self.levels

    def offsets(self) -> list[int]:
        """Start index of every level inside the sorted configuration."""
        starts, total = [], 0
        for a in self.parts:
            starts.append(total)
            total += a
        return starts


@dataclass(frozen=True)
class StratumId:
    """Identifies F_{A, sigma}."""

    partition: Partition
    order: Permutation

    def __post_init__(self) -> None:
        if self.partition.k != self.order.k:
            raise ArgumentError(
                f"Partition of {self.partition.k} and permutation of {self.order.k} "
                "labels do not describe the same k"
            )

    @property
    def k(self) -> int:
        return self.order.k


@dataclass(frozen=True)
class LevelHeights:
    """Strictly increasing heights h_1 < ... < h_l of the levels."""

    heights: tuple[float, ...]

    def __post_init__(self) -> None:
        heights = tuple(float(h) for h in self.heights)
        if any(b <= a for a, b in zip(heights, heights[1:])):
            raise ArgumentError(f"Level heights must be strictly increasing: {heights}")
        object.__setattr__(self, "heights", heights)

    def __len__(self) -> int:
        return len(self.heights)

    def __getitem__(self, index: int) -> float:
        return self.heights[index]


class Ordering(IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


def lex_compare(p: Sequence[float], q: Sequence[float]) -> Ordering:
    """
    Reverse-lexicographic comparison: coordinate n decides first, then n-1, ..., then 1.

    Raises:
        ArgumentError: If the points have different dimensions.
    """
    if len(p) != len(q):
        raise ArgumentError(f"Cannot compare points of dimension {len(p)} and {len(q)}")
    for a, b in zip(reversed(list(p)), reversed(list(q))):
        if a < b:
            return Ordering.LESS
        if a > b:
            return Ordering.GREATER
    return Ordering.EQUAL


def sort_permutation(x: Configuration) -> Permutation:
    """The unique sigma_x with x_{sigma(1)} < ... < x_{sigma(k)}."""
    # lexsort treats the last key row as the primary key
    return Permutation.from_indices(np.lexsort(x.points.T).tolist())


def partition_of(x: Configuration) -> tuple[Partition, LevelHeights]:
    """Group the sorted points by equal last coordinate."""
    heights, counts = np.unique(x.heights, return_counts=True)
    return Partition(tuple(counts.tolist())), LevelHeights(tuple(heights.tolist()))


def stratum_of(x: Configuration) -> StratumId:
    partition, _ = partition_of(x)
    return StratumId(partition=partition, order=sort_permutation(x))


def level_count(x: Configuration) -> int:
    return int(np.unique(x.heights).size)


def level_gap(x: Configuration) -> float:
    """Smallest gap between consecutive level heights; infinite for a single level."""
    heights = np.unique(x.heights)
    if heights.size < 2:
        return math.inf
    return float(np.diff(heights).min())


def _check_pair(x: Configuration, y: Configuration) -> None:
    if not x.same_shape(y):
        raise ArgumentError(
            f"Configurations differ in shape: k={x.k}, n={x.dim} vs k={y.k}, n={y.dim}"
        )


def domain_index(x: Configuration, y: Configuration) -> int:
    """Index i = |A_x| + |A_y| of the planning domain F_i containing (x, y)."""
    _check_pair(x, y)
    return level_count(x) + level_count(y)


def enumerate_partitions(k: int) -> list[Partition]:
    """All 2^(k-1) compositions of k in lexicographic order."""
    if k < 1:
        raise ArgumentError(f"k must be >= 1, got {k}")

    def compositions(rest: int) -> list[tuple[int, ...]]:
        if rest == 0:
            return [()]
        return [
            (first, *tail)
            for first in range(1, rest + 1)
            for tail in compositions(rest - first)
        ]

    return [Partition(parts) for parts in compositions(k)]


def domain_strata(i: int, k: int) -> list[tuple[Partition, Partition]]:
    """Partition pairs (A, B) with |A| + |B| = i, i.e. the pieces F_A x F_B of F_i."""
    if not 2 <= i <= 2 * k:
        raise ArgumentError(f"Domain index must lie in 2..{2 * k}, got {i}")
    partitions = enumerate_partitions(k)
    return [(a, b) for a in partitions for b in partitions if a.levels + b.levels == i]


def realize_stratum(
    stratum: StratumId, dim: int, rng: np.random.Generator | None = None
) -> Configuration:
    """
    A configuration lying in F_{A, sigma}.

    Level j sits at height 2(j-1); inside a level the points are spaced along
    the first axis, jittered when a generator is supplied.
    """
    if dim < 2:
        raise ArgumentError(f"Ambient dimension must be >= 2, got {dim}")
    ordered = np.zeros((stratum.k, dim))
    row = 0
    for level, size in enumerate(stratum.partition.parts):
        for slot in range(size):
            jitter = rng.uniform(0.0, 0.5) if rng is not None else 0.0
            ordered[row, 0] = 2.0 * slot + jitter
            ordered[row, -1] = 2.0 * level
            row += 1
    points = np.empty_like(ordered)
    points[list(stratum.order.indices)] = ordered
    return Configuration(dim, points)
