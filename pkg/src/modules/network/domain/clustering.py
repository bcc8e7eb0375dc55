"""LEACH cluster-head election, member assignment and TDMA slot order."""

import logging
import math
from collections.abc import Sequence
from dataclasses import dataclass
from typing import Protocol

from src.modules.core.domain.geometry import Point
from src.modules.network.domain.node import NodeState

logger = logging.getLogger(__name__)


class NoAliveNodes(Exception):
    """Raised when an election is requested on a network with no alive node."""

    pass


class UniformSource(Protocol):
    """Anything that draws uniform floats in [0, 1)."""

    def random(self) -> float:
        """Draw one uniform float."""
        ...


@dataclass(frozen=True)
class ClusterAssignment:
    """One round's clusters.

    Attributes:
        round_index: Round the assignment belongs to.
        heads: Head ids in ascending order.
        members: Member id to head id.
        tdma: Head id to its members in slot order (ascending id).
    """

    round_index: int
    heads: tuple[int, ...]
    members: dict[int, int]
    tdma: dict[int, tuple[int, ...]]

    def cluster_of(self, head_id: int) -> tuple[int, ...]:
        """Head followed by its members."""
        return (head_id, *self.tdma[head_id])


def election_threshold(p: float, round_index: int) -> float:
    """LEACH threshold T(n) for a candidate node.

    Args:
        p: Desired head fraction.
        round_index: Current round.

    Returns:
        ``p / (1 - p * (r mod ⌈1/p⌉))``, capped at 1; the last round of an
        epoch always yields 1 so every remaining candidate serves.
    """
    epoch = math.ceil(1.0 / p)
    position = round_index % epoch
    denominator = 1.0 - p * position
    if position == epoch - 1 or denominator <= 0.0:
        return 1.0
    return min(1.0, p / denominator)


def _strongest(nodes: Sequence[NodeState]) -> NodeState:
    return min(nodes, key=lambda node: (-node.energy, node.id))


@dataclass(frozen=True)
class Election:
    """Outcome of one election.

    Attributes:
        heads: Head ids in ascending order.
        forced: Whether the zero-head repair picked the only head.
    """

    heads: list[int]
    forced: bool


def hold_election(
    nodes: Sequence[NodeState],
    round_index: int,
    p: float,
    rng: UniformSource,
    fixed_count: int | None = None,
) -> Election:
    """Elect the round's cluster heads with the LEACH threshold.

    Every alive candidate (not yet head in the current epoch) draws once, in id
    order; it becomes head when its draw is below T(n). If nobody is elected the
    strongest candidate is forced, falling back to the strongest alive node
    when the candidate set is empty.

    Args:
        nodes: All nodes, dead ones included.
        round_index: Current round.
        p: Desired head fraction.
        rng: Source of uniform draws.
        fixed_count: If set, elect exactly this many heads instead of thresholding.

    Returns:
        The elected heads and whether the zero-head repair fired.

    Raises:
        NoAliveNodes: If every node is dead.
    """
    alive = [node for node in sorted(nodes, key=lambda n: n.id) if node.alive]
    if not alive:
        raise NoAliveNodes(f"no alive node at round {round_index}")
    epoch = math.ceil(1.0 / p)
    candidates = [node for node in alive if node.is_eligible_head(round_index, epoch)]

    if fixed_count is not None:
        draws = {node.id: rng.random() for node in alive}
        eligible = {node.id for node in candidates}
        ranked = sorted(
            alive, key=lambda node: (node.id not in eligible, draws[node.id], node.id)
        )
        chosen = ranked[: min(fixed_count, len(alive))]
        return Election(heads=sorted(node.id for node in chosen), forced=False)

    threshold = election_threshold(p, round_index)
    heads = [node.id for node in candidates if rng.random() < threshold]
    if heads:
        return Election(heads=heads, forced=False)
    forced = _strongest(candidates or alive)
    logger.debug("Round %d elected no head, forcing node %d", round_index, forced.id)
    return Election(heads=[forced.id], forced=True)


def elect_heads(
    nodes: Sequence[NodeState],
    round_index: int,
    p: float,
    rng: UniformSource,
    fixed_count: int | None = None,
) -> list[int]:
    """Elect the round's cluster heads; see ``hold_election``.

    Returns:
        Head ids in ascending order.

    Raises:
        NoAliveNodes: If every node is dead.
    """
    return hold_election(nodes, round_index, p, rng, fixed_count).heads


def _nearest_head(position: Point, heads: Sequence[NodeState]) -> int:
    return min(heads, key=lambda head: (position.distance_to(head.position), head.id)).id


def assign_members(
    nodes: Sequence[NodeState], heads: Sequence[int], round_index: int = 0
) -> ClusterAssignment:
    """Attach every alive non-head node to its nearest head.

    Args:
        nodes: All nodes, dead ones included.
        heads: Ids of this round's heads, all alive.
        round_index: Round stamped on the assignment.

    Returns:
        The assignment; dead nodes are left out, TDMA order is ascending id.

    Raises:
        ValueError: If ``heads`` is empty or names a dead node.
    """
    if not heads:
        raise ValueError("at least one cluster head is required")
    by_id = {node.id: node for node in nodes}
    head_nodes = [by_id[head] for head in sorted(heads)]
    if any(not head.alive for head in head_nodes):
        raise ValueError("cluster heads must be alive")
    head_ids = {head.id for head in head_nodes}

    members: dict[int, int] = {}
    slots: dict[int, list[int]] = {head.id: [] for head in head_nodes}
    for node in sorted(nodes, key=lambda n: n.id):
        if not node.alive or node.id in head_ids:
            continue
        head_id = _nearest_head(node.position, head_nodes)
        members[node.id] = head_id
        slots[head_id].append(node.id)

    return ClusterAssignment(
        round_index=round_index,
        heads=tuple(head.id for head in head_nodes),
        members=members,
        tdma={head_id: tuple(ids) for head_id, ids in slots.items()},
    )


def recharge_groups(
    nodes: Sequence[NodeState], assignment: ClusterAssignment
) -> dict[int, tuple[int, ...]]:
    """Nodes within reach of the harvester at each head stop.

    A stop reaches its cluster (head and members) plus every dead node whose
    nearest current head is that head.

    Returns:
        Head id to node ids in ascending order, head first.
    """
    by_id = {node.id: node for node in nodes}
    head_nodes = [by_id[head] for head in assignment.heads]
    assigned = set(assignment.members) | set(assignment.heads)
    extra: dict[int, list[int]] = {head: [] for head in assignment.heads}
    for node in sorted(nodes, key=lambda n: n.id):
        if node.alive or node.id in assigned:
            continue
        extra[_nearest_head(node.position, head_nodes)].append(node.id)
    return {
        head: (head, *sorted((*assignment.tdma[head], *extra[head])))
        for head in assignment.heads
    }
