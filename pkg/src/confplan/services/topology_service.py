"""
Topology service: sphere retractions and the closed-form complexity table.

Pattern: Service Layer (Layer 2)
- Turns retraction round trips into reports
- Wraps formula lookups for the command line
- No argument parsing or file handling

Architecture: CLI → Service → retractions / complexity_formulas
"""

from __future__ import annotations

import logging

import numpy as np

from ..complexity_formulas import (
    SpaceQuery,
    cat_value,
    domain_count,
    formula_table,
    tc_value,
    tcn_value,
)
from ..config import ConfplanConfig
from ..config_space import Configuration
from ..retractions import (
    GroupSpec,
    SpaceSpec,
    UnitTuple,
    config_to_sphere,
    membership,
    sphere_to_config,
)

logger = logging.getLogger(__name__)


def _space_payload(space: SpaceSpec, member: bool) -> dict:
    if not space.acts_freely:
        logger.warning(
            "Group %s does not act freely on unpunctured R^%d",
            space.group.value,
            space.dim,
        )
    return {
        "member": member,
        "group": space.group.value,
        "acts_freely": space.acts_freely,
    }


class TopologyService:
    """
    Retraction reports and complexity lookups.

    Follows Pattern #3 (Dependency Injection):
    - Configuration injected via constructor

    Follows Pattern #4 (Separation of Concerns):
    - Delegates maps to retractions and values to complexity_formulas
    - Returns structured data
    """

    def __init__(self, config: ConfplanConfig):
        """
        Initialize topology service.

        Args:
            config: Confplan settings
        """
        self.config = config

    def retract_vectors(
        self, u: UnitTuple, punctured: bool, group: GroupSpec = GroupSpec.ORTHOGONAL
    ) -> dict:
        """
        Map a unit tuple into the configuration space and back.

        Args:
            u: Tuple of unit vectors
            punctured: Use the punctured embedding (one more point, origin removed)
            group: Orbit space the image is checked against

        Returns:
            Dictionary with the image, its norms, the round-trip error of
            beta(alpha(u)) and the orbit-space membership
        """
        image = sphere_to_config(u, punctured)
        back = config_to_sphere(image, punctured)
        space = SpaceSpec(dim=u.dim, group=group, puncture_origin=punctured)
        return {
            "mode": "punctured" if punctured else "plain",
            "image": {"dim": image.dim, "points": image.as_lists()},
            "norms": np.linalg.norm(image.points, axis=1).tolist(),
            "round_trip_error": float(np.abs(back.vectors - u.vectors).max()),
            **_space_payload(space, membership(image, space)),
        }

    def retract_configuration(
        self, x: Configuration, punctured: bool, group: GroupSpec = GroupSpec.TRIVIAL
    ) -> dict:
        """
        Map a configuration to its unit tuple and through the retract again.

        Args:
            x: Configuration to retract
            punctured: Use the punctured maps
            group: Orbit space x is checked against

        Returns:
            Dictionary with the unit tuple, the retracted image, the
            round-trip error and the membership of x
        """
        u = config_to_sphere(x, punctured)
        image = sphere_to_config(u, punctured)
        again = config_to_sphere(image, punctured)
        space = SpaceSpec(dim=x.dim, group=group, puncture_origin=punctured)
        return {
            "mode": "punctured" if punctured else "plain",
            "vectors": u.vectors.tolist(),
            "image": {"dim": image.dim, "points": image.as_lists()},
            "round_trip_error": float(np.abs(again.vectors - u.vectors).max()),
            **_space_payload(space, membership(x, space)),
        }

    def complexity(self, query: SpaceQuery, order: int = 2) -> dict:
        """
        cat and TC_order of the queried space.

        Args:
            query: Dimension, point count, obstacles and group flag
            order: 2 for TC, higher for TC_order

        Returns:
            Dictionary with order, value, cat and the planner's rule count

        Raises:
            UncoveredCaseError: If TC_order has no closed form for the query.
        """
        value = tc_value(query) if order == 2 else tcn_value(order, query)
        logger.info(
            "TC_%d(dim=%d, k=%d, r=%d) = %d",
            order,
            query.dim,
            query.k,
            query.r,
            value,
        )
        return {
            "order": order,
            "value": value,
            "cat": cat_value(query),
            "planner_rules": domain_count(query.k),
        }

    def table(self, k_max: int) -> list[dict[str, object]]:
        """
        Formula table for k = 2..k_max.

        Args:
            k_max: Largest point count

        Returns:
            One row per (dim, k, r, group) case; uncovered cells are None
        """
        return formula_table(k_max)
