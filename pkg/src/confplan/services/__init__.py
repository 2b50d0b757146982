"""Services layer: orchestration between the command line and the core modules."""

from .planning_service import PlanningService
from .topology_service import TopologyService
from .verification_service import VerificationService

__all__ = ["PlanningService", "TopologyService", "VerificationService"]
