"""Harvester domain events module."""

from dataclasses import dataclass

from src.modules.core.domain.domain_event import DomainEvent


@dataclass(frozen=True)
class BudgetReceived(DomainEvent):
    """Raised when the power station hands the harvester its round budget.

    Attributes:
        budget: Energy available for this round (J).
        previous_consumption: Network consumption the budget was derived from (J).
    """

    budget: float
    previous_consumption: float


@dataclass(frozen=True)
class AllocationsPlanned(DomainEvent):
    """Raised when the base station splits the budget over the clusters.

    Attributes:
        allocations: Pairs of head id and allocated energy, in tour order.
        tour_length: Planned closed-tour length (m).
    """

    allocations: tuple[tuple[int, float], ...]
    tour_length: float


@dataclass(frozen=True)
class ClusterRecharged(DomainEvent):
    """Raised after the harvester radiated at a cluster-head stop.

    Attributes:
        head_id: Stop where the harvester parked.
        emitted: Energy radiated (J).
        delivered: Energy actually stored by the cluster's nodes (J).
    """

    head_id: int
    emitted: float
    delivered: float


@dataclass(frozen=True)
class StopSkipped(DomainEvent):
    """Raised when a stop does not fit in the round's time budget.

    Attributes:
        head_id: Skipped stop.
        forfeited: Allocation returned to the power station (J).
    """

    head_id: int
    forfeited: float
