"""Network domain events module.

This module defines the events raised by sensor nodes and by the base station
while a round is being played: elections, cluster formation, data reports,
deaths, revivals and the published energy ledger.
"""

from dataclasses import dataclass

from src.modules.core.domain.domain_event import DomainEvent


@dataclass(frozen=True)
class ClusterHeadsElected(DomainEvent):
    """Raised by the base station once the round's heads are known.

    Attributes:
        heads: Elected head ids in ascending order.
        forced: Whether the head set came from the zero-head repair.
    """

    heads: tuple[int, ...]
    forced: bool


@dataclass(frozen=True)
class ClustersFormed(DomainEvent):
    """Raised by the base station after member assignment.

    Attributes:
        tdma: Pairs of head id and its TDMA-ordered member ids.
    """

    tdma: tuple[tuple[int, tuple[int, ...]], ...]


@dataclass(frozen=True)
class MemberReportSent(DomainEvent):
    """Raised by a member after its data sub-phase transmission.

    Attributes:
        head_id: Destination cluster head.
        packets: Packets the member attempted in the round.
        delivered: Whether the whole stream was paid for and sent.
    """

    head_id: int
    packets: int
    delivered: bool


@dataclass(frozen=True)
class AggregateForwarded(DomainEvent):
    """Raised by a head after its transmission to the base station.

    Attributes:
        bits: Size of the aggregate packet.
        received_streams: Member streams the head received before aggregating.
        delivered: Whether the aggregate reached the base station.
    """

    bits: int
    received_streams: int
    delivered: bool


@dataclass(frozen=True)
class NodeDied(DomainEvent):
    """Raised when a node's energy falls to the death threshold.

    Attributes:
        phase: Round phase in which the node died.
    """

    phase: str


@dataclass(frozen=True)
class NodeRevived(DomainEvent):
    """Raised when a recharge brings a dead node back above the threshold.

    Attributes:
        energy: Energy after the recharge.
    """

    energy: float


@dataclass(frozen=True)
class LedgerPublished(DomainEvent):
    """Raised by the base station when it publishes the round's consumption.

    Attributes:
        network_total: Energy drained from the network this round (J).
        per_cluster: Pairs of head id and the energy its cluster drained.
    """

    network_total: float
    per_cluster: tuple[tuple[int, float], ...]
