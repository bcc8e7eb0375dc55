"""Sensor node entity module.

This module defines the NodeState entity: a sensor with a fixed position, a
battery, and a per-round LEACH role. Every energy mutation goes through
``debit`` or ``credit`` so the alive flag always follows the energy.
"""

from dataclasses import dataclass
from enum import StrEnum

from src.modules.core.domain.entity import Entity
from src.modules.core.domain.geometry import Point
from src.modules.network.domain.events import NodeDied, NodeRevived


class NodeRole(StrEnum):
    """Role of a node in the current round."""

    CLUSTER_HEAD = "cluster_head"
    MEMBER = "member"
    UNASSIGNED = "unassigned"


@dataclass(eq=False)
class NodeState(Entity):
    """A sensor node.

    Attributes:
        position: Fixed location in meters.
        energy: Remaining battery energy (J), the current energy of the recharge law.
        death_threshold: Energy at or below which the node is dead.
        alive: Derived from ``energy``; never set directly.
        role: Role in the current round.
        rounds_since_ch: Rounds since the node last served as head, ``None`` if never.
    """

    position: Point
    energy: float
    death_threshold: float = 0.0
    alive: bool = True
    role: NodeRole = NodeRole.UNASSIGNED
    rounds_since_ch: int | None = None

    def __post_init__(self) -> None:
        """Derive the alive flag from the initial energy.

        Raises:
            ValueError: If the energy is negative.
        """
        if self.energy < 0:
            raise ValueError(f"Node {self.id} energy cannot be negative")
        self.alive = self.energy > self.death_threshold

    def debit(self, cost: float, round_index: int, phase: str) -> float:
        """Drain up to ``cost`` joules, clamping the battery at zero.

        Args:
            cost: Energy the operation needs.
            round_index: Current round, stamped on a death event.
            phase: Phase name, stamped on a death event.

        Returns:
            The energy actually drained, never more than the node held.
        """
        drained = min(cost, self.energy)
        self.energy -= drained
        if self.energy < 0.0:
            self.energy = 0.0
        was_alive = self.alive
        self.alive = self.energy > self.death_threshold
        if was_alive and not self.alive:
            self.add_domain_event(
                NodeDied(aggregate_id=self.id, round_index=round_index, phase=phase)
            )
        return drained

    def credit(
        self, gain: float, capacity: float, round_index: int, allow_revival: bool
    ) -> float:
        """Add harvested energy, clamped at the battery capacity.

        Dead nodes only accept energy when revival is allowed.

        Returns:
            The energy actually credited.
        """
        if not self.alive and not allow_revival:
            return 0.0
        credited = max(0.0, min(gain, capacity - self.energy))
        if credited == 0.0:
            return 0.0
        was_alive = self.alive
        self.energy += credited
        self.alive = self.energy > self.death_threshold
        if self.alive and not was_alive:
            self.add_domain_event(
                NodeRevived(
                    aggregate_id=self.id, round_index=round_index, energy=self.energy
                )
            )
        return credited

    def serve_as_head(self) -> None:
        """Take the cluster-head role for this round."""
        self.role = NodeRole.CLUSTER_HEAD
        self.rounds_since_ch = 0

    def join_cluster(self) -> None:
        """Take the member role for this round."""
        self.role = NodeRole.MEMBER

    def end_round(self) -> None:
        """Clear the role and age the head-rotation counter."""
        self.role = NodeRole.UNASSIGNED
        if self.rounds_since_ch is not None:
            self.rounds_since_ch += 1

    def is_eligible_head(self, round_index: int, epoch_length: int) -> bool:
        """Check membership of the LEACH candidate set G.

        A node is a candidate if it has not served as head in the current
        rotation epoch; epochs start at multiples of ``epoch_length``.
        """
        if self.rounds_since_ch is None:
            return True
        return self.rounds_since_ch > round_index % epoch_length

    def copy(self) -> "NodeState":
        """Return an independent copy without pending events."""
        return NodeState(
            id=self.id,
            position=self.position,
            energy=self.energy,
            death_threshold=self.death_threshold,
            role=self.role,
            rounds_since_ch=self.rounds_since_ch,
        )
