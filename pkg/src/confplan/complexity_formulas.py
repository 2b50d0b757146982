"""Closed-form values of cat, TC and TC_s for Euclidean (orbit) configuration spaces."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ArgumentError, UncoveredCaseError


@dataclass(frozen=True)
class SpaceQuery:
    """
    F(R^dim minus r points, k), or F_G(R^dim minus the origin, k) when
    group_free_odd is set (G finite, acting freely, dim odd).
    """

    dim: int
    k: int
    r: int = 0
    group_free_odd: bool = False

    def __post_init__(self) -> None:
        if self.dim < 2 or self.k < 2:
            raise ArgumentError(
                f"Need dim >= 2 and k >= 2, got dim={self.dim}, k={self.k}"
            )
        if self.r < 0:
            raise ArgumentError(f"Obstacle count must be >= 0, got {self.r}")
        if self.group_free_odd and self.dim % 2 == 0:
            raise ArgumentError("A finite group acting freely needs an odd dimension")

    @property
    def odd(self) -> bool:
        return self.dim % 2 == 1


def tc_value(q: SpaceQuery) -> int:
    """
    Topological complexity.

    Raises:
        UncoveredCaseError: For even dimension with obstacles.
    """
    if q.group_free_odd:
        return 2 * q.k + 1
    if q.r == 0:
        return 2 * q.k - 1 if q.odd else 2 * q.k - 2
    if not q.odd:
        raise UncoveredCaseError(
            f"TC of F(R^{q.dim} minus {q.r} points, {q.k}) has no closed form here"
        )
    return 2 * q.k + 1


def cat_value(q: SpaceQuery) -> int:
    """Lusternik-Schnirelmann category."""
    if q.group_free_odd or q.r > 0:
        return q.k + 1
    return q.k


def tcn_value(order: int, q: SpaceQuery) -> int:
    """
    Higher topological complexity TC_order.

    Raises:
        ArgumentError: If order < 2.
        UncoveredCaseError: For even dimension.
    """
    if order < 2:
        raise ArgumentError(f"Higher TC order must be >= 2, got {order}")
    if not q.odd:
        raise UncoveredCaseError(
            f"TC_{order} in even dimension {q.dim} has no closed form here"
        )
    if q.group_free_odd or q.r > 0:
        return order * q.k + 1
    return order * (q.k - 1) + 1


def domain_count(k: int) -> int:
    """Number of local rules of the planner, one per i in {2, ..., 2k}."""
    if k < 1:
        raise ArgumentError(f"k must be >= 1, got {k}")
    return 2 * k - 1


def legacy_rule_count(k: int) -> int:
    """Rule count k^2 - k + 1 of the earlier planner family."""
    if k < 1:
        raise ArgumentError(f"k must be >= 1, got {k}")
    return k * k - k + 1


def _or_none(fn, *args) -> int | None:
    try:
        return fn(*args)
    except UncoveredCaseError:
        return None


def formula_table(k_max: int) -> list[dict[str, object]]:
    """Rows for dimensions 2 and 3, k = 2..k_max, r in {0, 1}, plus the group case."""
    if k_max < 2:
        raise ArgumentError(f"k_max must be >= 2, got {k_max}")
    rows: list[dict[str, object]] = []
    for k in range(2, k_max + 1):
        queries = [SpaceQuery(dim, k, r) for dim in (2, 3) for r in (0, 1)]
        queries.append(SpaceQuery(3, k, 0, group_free_odd=True))
        for q in queries:
            rows.append(
                {
                    "dim": q.dim,
                    "k": q.k,
                    "r": q.r,
                    "group_free": q.group_free_odd,
                    "cat": cat_value(q),
                    "tc": _or_none(tc_value, q),
                    "tc3": _or_none(tcn_value, 3, q),
                    "planner_rules": domain_count(k),
                    "legacy_rules": legacy_rule_count(k),
                }
            )
    return rows
