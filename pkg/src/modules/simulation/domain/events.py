"""Simulation-level domain events module."""

from dataclasses import dataclass

from src.modules.core.domain.domain_event import DomainEvent
from src.modules.simulation.domain.metrics import RoundMetrics


@dataclass(frozen=True)
class RoundCompleted(DomainEvent):
    """Raised once the round's metrics row has been appended.

    Attributes:
        metrics: The new row.
    """

    metrics: RoundMetrics


@dataclass(frozen=True)
class NetworkDead(DomainEvent):
    """Raised the first round that starts with no alive node."""

    pass
