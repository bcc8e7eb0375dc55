"""Simulation event handlers module.

This module contains handlers for the events raised while a round is played:
logging the run's progress, keeping the phase log for recounts, and
collecting the cluster membership rows behind ``--dump-clusters``.
"""

import logging
from typing import override

from src.modules.core.domain.domain_event import DomainEvent
from src.modules.core.domain.event_dispatcher import EventHandler
from src.modules.harvester.domain.events import ClusterRecharged, StopSkipped
from src.modules.network.domain.events import ClustersFormed, NodeDied, NodeRevived
from src.modules.simulation.domain.events import NetworkDead, RoundCompleted

logger = logging.getLogger(__name__)


class RoundLogHandler(EventHandler):
    """Handler for logging the run as it progresses.

    Completed rounds, deaths of the whole network and every skipped stop are
    logged at INFO; every other event goes to DEBUG.
    """

    @override
    def handle(self, event: DomainEvent) -> None:
        """Log one event.

        Args:
            event: Any simulation event.
        """
        if isinstance(event, RoundCompleted):
            self._handle_round_completed(event)
        elif isinstance(event, NetworkDead):
            logger.info("Round %d: no alive node left", event.round_index)
        elif isinstance(event, StopSkipped):
            logger.info(
                "Round %d: harvester skipped head %d, %.4g J forfeited",
                event.round_index,
                event.head_id,
                event.forfeited,
            )
        elif isinstance(event, NodeDied):
            logger.debug(
                "Round %d: node %d died in the %s phase",
                event.round_index,
                event.aggregate_id,
                event.phase,
            )
        elif isinstance(event, NodeRevived):
            logger.debug(
                "Round %d: node %d revived with %.4g J",
                event.round_index,
                event.aggregate_id,
                event.energy,
            )
        elif isinstance(event, ClusterRecharged):
            logger.debug(
                "Round %d: head %d radiated %.4g J, %.4g J stored",
                event.round_index,
                event.head_id,
                event.emitted,
                event.delivered,
            )
        else:
            logger.debug("%r", event)

    def _handle_round_completed(self, event: RoundCompleted) -> None:
        row = event.metrics
        logger.info(
            "Round %d t=%gs alive=%d heads=%d consumed=%.4gJ delivered=%.4gJ visited=%d",
            row.round_index,
            row.sim_time,
            row.alive_count,
            row.ch_count,
            row.consumed_cumulative,
            row.delivered_cumulative,
            row.clusters_visited,
        )


class PhaseLogHandler(EventHandler):
    """Handler that keeps every event of a run in dispatch order."""

    def __init__(self) -> None:
        """Start with an empty log."""
        self.events: list[DomainEvent] = []

    @override
    def handle(self, event: DomainEvent) -> None:
        """Append the event to the log."""
        self.events.append(event)

    def of_round(self, round_index: int) -> list[DomainEvent]:
        """Events raised during one round, in phase order."""
        return [event for event in self.events if event.round_index == round_index]


class ClusterDumpHandler(EventHandler):
    """Handler collecting ``(round, head, member)`` rows from cluster formation.

    A head with no member yields one row whose member is ``None``.
    """

    def __init__(self) -> None:
        """Start with no rows."""
        self.rows: list[tuple[int, int, int | None]] = []

    @override
    def handle(self, event: DomainEvent) -> None:
        """Record the memberships of a ClustersFormed event."""
        if not isinstance(event, ClustersFormed):
            return
        for head_id, members in event.tdma:
            if not members:
                self.rows.append((event.round_index, head_id, None))
            for member_id in members:
                self.rows.append((event.round_index, head_id, member_id))
