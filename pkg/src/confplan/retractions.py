"""
Products of spheres as retracts of (orbit) configuration spaces.

    alpha_1(u_1, ..., u_{k-1}) = (0, S_1, ..., S_{k-1})
    alpha_2(u_1, ..., u_k)     = (S_1, ..., S_k)
    beta_1(y) = (N(y_2 - y_1), ..., N(y_k - y_{k-1}))
    beta_2(y) = (N(y_1), N(y_2 - y_1), ..., N(y_k - y_{k-1}))

where S_l = u_1 + 3 u_2 + ... + 3^(l-1) u_l and N(v) = v / |v|. Then
beta_i . alpha_i is the identity, and because
(3^(l-1) + 1) / 2 <= |S_l| <= (3^l - 1) / 2 the norms of alpha_2's components
strictly increase and no two components share an O(n)-orbit.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from .config_space import Configuration
from .errors import ArgumentError, InvariantError

UNIT_TOLERANCE = 1e-12


class GroupSpec(str, Enum):
    """Orthogonal groups whose orbit-distinctness is decidable by a predicate."""

    TRIVIAL = "trivial"
    ANTIPODAL = "antipodal"
    ORTHOGONAL = "orthogonal"

    @property
    def order(self) -> float:
        return {"trivial": 1, "antipodal": 2}.get(self.value, float("inf"))


@dataclass(frozen=True)
class SpaceSpec:
    """
    F_G(R^n minus punctures, k): group, optional removed origin, fixed obstacles Q_r.

    A non-trivial group acts freely only on the punctured space; the
    unpunctured orbit space is still admitted for membership checks.
    """

    dim: int
    group: GroupSpec = GroupSpec.TRIVIAL
    puncture_origin: bool = False
    obstacles: tuple[tuple[float, ...], ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        if self.dim < 2:
            raise ArgumentError(f"Ambient dimension must be >= 2, got {self.dim}")
        obstacles = tuple(tuple(float(c) for c in q) for q in self.obstacles)
        if any(len(q) != self.dim for q in obstacles):
            raise ArgumentError(f"Obstacles must have {self.dim} coordinates")
        if len(set(obstacles)) != len(obstacles):
            raise ArgumentError("Obstacles must be pairwise distinct")
        object.__setattr__(self, "group", GroupSpec(self.group))
        object.__setattr__(self, "obstacles", obstacles)

    @property
    def acts_freely(self) -> bool:
        return self.group is GroupSpec.TRIVIAL or self.puncture_origin


@dataclass(frozen=True, eq=False)
class UnitTuple:
    """Point of (S^{n-1})^m stored as an (m, n) array of unit vectors."""

    vectors: np.ndarray

    def __post_init__(self) -> None:
        array = np.array(self.vectors, dtype=np.float64)
        if array.ndim != 2 or array.shape[0] < 1 or array.shape[1] < 2:
            raise ArgumentError(
                f"Expected a non-empty list of vectors, got shape {array.shape}"
            )
        norms = np.linalg.norm(array, axis=1)
        if not np.all(np.abs(norms - 1.0) <= UNIT_TOLERANCE):
            raise ArgumentError("Every vector of a unit tuple must have norm 1")
        array.setflags(write=False)
        object.__setattr__(self, "vectors", array)

    @classmethod
    def from_vectors(cls, vectors: Sequence[Sequence[float]]) -> "UnitTuple":
        """Normalise arbitrary non-zero vectors into a unit tuple."""
        return cls(np.array([normalize(v) for v in vectors]))

    @property
    def dim(self) -> int:
        return int(self.vectors.shape[1])

    def __len__(self) -> int:
        return int(self.vectors.shape[0])


def normalize(v: Sequence[float] | np.ndarray) -> np.ndarray:
    """
    N(v) = v / |v|.

    Raises:
        ArgumentError: If v is zero or not finite.
    """
    vector = np.asarray(v, dtype=np.float64)
    norm = float(np.linalg.norm(vector))
    if not np.isfinite(norm) or norm == 0.0:
        raise ArgumentError("Cannot normalize a zero or non-finite vector")
    return vector / norm


def partial_sums(u: UnitTuple) -> np.ndarray:
    """Rows S_1, ..., S_m with S_l = sum over i <= l of 3^(i-1) u_i."""
    weights = 3.0 ** np.arange(len(u))
    return np.cumsum(weights[:, None] * u.vectors, axis=0)


def sphere_to_config(u: UnitTuple, punctured: bool) -> Configuration:
    """alpha_2 when punctured, otherwise alpha_1 (origin prepended)."""
    sums = partial_sums(u)
    if not punctured:
        sums = np.vstack([np.zeros((1, u.dim)), sums])
    return Configuration(u.dim, sums)


def config_to_sphere(x: Configuration, punctured: bool) -> UnitTuple:
    """
    beta_2 when punctured, otherwise beta_1.

    Raises:
        ArgumentError: If punctured and the first point is the origin, or if
            beta_1 is asked for a single point.
        InvariantError: If two consecutive points coincide.
    """
    differences = np.diff(x.points, axis=0)
    if punctured:
        if not np.any(x.points[0]):
            raise ArgumentError("The first point must differ from the removed origin")
        differences = np.vstack([x.points[:1], differences])
    if differences.shape[0] == 0:
        raise ArgumentError("beta_1 needs at least two points")
    norms = np.linalg.norm(differences, axis=1)
    if np.any(norms == 0.0):
        raise InvariantError("Consecutive points of a configuration coincide")
    return UnitTuple(differences / norms[:, None])


def _pairwise_distinct(values: np.ndarray) -> bool:
    return np.unique(values, axis=0).shape[0] == values.shape[0]


def membership(x: Configuration, space: SpaceSpec) -> bool:
    """
    Whether x lies in the configuration space described by `space`.

    Orbit predicates: trivial x_i != x_j, antipodal x_i != +-x_j, orthogonal
    |x_i| != |x_j|.
    """
    if x.dim != space.dim:
        raise ArgumentError(f"Configuration in R^{x.dim} checked against R^{space.dim}")
    points = x.points
    if space.puncture_origin and np.any(~points.any(axis=1)):
        return False
    if space.obstacles:
        obstacles = np.array(space.obstacles)
        if (points[:, None, :] == obstacles[None, :, :]).all(axis=2).any():
            return False
    if space.group is GroupSpec.TRIVIAL:
        return _pairwise_distinct(points)
    if space.group is GroupSpec.ANTIPODAL:
        first, second = np.triu_indices(x.k, k=1)
        same = (points[first] == points[second]).all(axis=1)
        opposite = (points[first] == -points[second]).all(axis=1)
        return not bool((same | opposite).any())
    return _pairwise_distinct(np.linalg.norm(points, axis=1)[:, None])
