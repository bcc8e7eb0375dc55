"""Radio energy model and the per-round energy debit.

Transmit cost follows the two-regime first-order radio model; listening,
sleeping and sampling follow the node power-state decomposition. ``charge_round``
walks one round's data path in a fixed phase order and returns the ledger the
base station publishes to the harvester.
"""

import math
from collections.abc import Sequence
from dataclasses import dataclass, field

from src.modules.network.domain.clustering import ClusterAssignment
from src.modules.network.domain.config import RadioParams, SimConfig
from src.modules.network.domain.events import AggregateForwarded, MemberReportSent
from src.modules.network.domain.node import NodeRole, NodeState

MEMBER_PHASE = "member"
HEAD_PHASE = "head"
IDLE_PHASE = "idle"


def tx_energy(bits: int, d: float, radio: RadioParams) -> float:
    """Energy to transmit ``bits`` over ``d`` meters.

    Free-space (d²) below the crossover distance, multipath (d⁴) at or above it.
    """
    electronics = radio.e_elec * bits
    if d < radio.crossover_distance:
        return electronics + radio.eps_fs * bits * d**2
    return electronics + radio.eps_mp * bits * d**4


def rx_energy(bits: int, radio: RadioParams) -> float:
    """Energy to receive ``bits``."""
    return radio.e_elec * bits


def aggregate_energy(bits: int, n_signals: int, radio: RadioParams) -> float:
    """Energy a head spends fusing ``n_signals`` signals of ``bits`` each."""
    return radio.e_aggregate * bits * n_signals


def idle_sleep_energy(
    role: NodeRole, round_duration: float, active_fraction: float, radio: RadioParams
) -> float:
    """Listening, sleeping and sampling energy for one round.

    Heads listen for the whole round. Members listen during their TDMA share
    and sleep otherwise. Every node samples once.

    Args:
        role: Role of the node this round.
        round_duration: Round length (s).
        active_fraction: Share of the round a member spends listening, in [0, 1].
        radio: Radio constants.

    Returns:
        Energy in joules.

    Raises:
        ValueError: If ``active_fraction`` lies outside [0, 1].
    """
    if not 0.0 <= active_fraction <= 1.0:
        raise ValueError(f"active_fraction must be in [0, 1], got {active_fraction}")
    if role is NodeRole.CLUSTER_HEAD:
        radio_energy = radio.p_listen * round_duration
    else:
        radio_energy = (
            radio.p_listen * round_duration * active_fraction
            + radio.p_sleep * round_duration * (1.0 - active_fraction)
        )
    return radio_energy + radio.e_sample


@dataclass
class EnergyLedger:
    """Energy drained during one round.

    Attributes:
        round_index: Round the ledger covers.
        per_node: Node id to energy drained.
        per_cluster: Head id to energy drained by its whole cluster.
        forwarded_heads: Heads whose aggregate reached the base station.
    """

    round_index: int
    per_node: dict[int, float] = field(default_factory=dict)
    per_cluster: dict[int, float] = field(default_factory=dict)
    forwarded_heads: list[int] = field(default_factory=list)

    @property
    def network_total(self) -> float:
        """Sum of the per-node entries."""
        return math.fsum(self.per_node.values())

    def record(self, node_id: int, drained: float) -> None:
        """Add drained energy to a node's entry."""
        self.per_node[node_id] = self.per_node.get(node_id, 0.0) + drained


def _debit(ledger: EnergyLedger, node: NodeState, cost: float, phase: str) -> bool:
    if not node.alive:
        return False
    drained = node.debit(cost, ledger.round_index, phase)
    ledger.record(node.id, drained)
    return drained == cost


def charge_round(
    nodes: Sequence[NodeState], assignment: ClusterAssignment, config: SimConfig
) -> EnergyLedger:
    """Debit one round of sensing, reporting, aggregation and idling.

    Phases run in a fixed order: members stream their TDMA frames to their
    head; heads receive, aggregate and forward one packet to the base station;
    then every node still alive pays its listen/sleep share and its sample. A
    node that dies in a phase takes part in no later phase.

    Args:
        nodes: All nodes; entries are mutated in place.
        assignment: This round's clusters.
        config: Scenario configuration.

    Returns:
        The round's ledger.
    """
    radio = config.radio
    bits = config.packet_bits
    round_index = assignment.round_index
    by_id = {node.id: node for node in nodes}
    ledger = EnergyLedger(round_index=round_index)
    delivered: dict[int, list[int]] = {head: [] for head in assignment.heads}

    for head_id in assignment.heads:
        head = by_id[head_id]
        slots = assignment.tdma[head_id]
        frames = config.frames_for(len(slots))
        for member_id in slots:
            member = by_id[member_id]
            if not member.alive:
                continue
            cost = tx_energy(frames * bits, member.position.distance_to(head.position), radio)
            sent = _debit(ledger, member, cost, MEMBER_PHASE)
            if sent:
                delivered[head_id].append(member_id)
            member.add_domain_event(
                MemberReportSent(
                    aggregate_id=member_id,
                    round_index=round_index,
                    head_id=head_id,
                    packets=frames,
                    delivered=sent,
                )
            )

    for head_id in assignment.heads:
        head = by_id[head_id]
        if not head.alive:
            continue
        frames = config.frames_for(len(assignment.tdma[head_id]))
        received = 0
        for _member_id in delivered[head_id]:
            if not _debit(ledger, head, rx_energy(frames * bits, radio), HEAD_PHASE):
                break
            received += 1
        forwarded = (
            received == len(delivered[head_id])
            and _debit(
                ledger,
                head,
                aggregate_energy(bits, 1 + frames * received, radio),
                HEAD_PHASE,
            )
            and _debit(
                ledger,
                head,
                tx_energy(bits, head.position.distance_to(config.base_station), radio),
                HEAD_PHASE,
            )
        )
        if forwarded:
            ledger.forwarded_heads.append(head_id)
        head.add_domain_event(
            AggregateForwarded(
                aggregate_id=head_id,
                round_index=round_index,
                bits=bits,
                received_streams=received,
                delivered=forwarded,
            )
        )

    head_ids = set(assignment.heads)
    for node in sorted(nodes, key=lambda n: n.id):
        if node.id in head_ids:
            role, active_fraction = NodeRole.CLUSTER_HEAD, 1.0
        elif node.id in assignment.members:
            slots = len(assignment.tdma[assignment.members[node.id]])
            role, active_fraction = NodeRole.MEMBER, config.data_phase_fraction / slots
        else:
            continue
        _debit(
            ledger,
            node,
            idle_sleep_energy(role, config.round_duration, active_fraction, radio),
            IDLE_PHASE,
        )

    for head_id in assignment.heads:
        ledger.per_cluster[head_id] = math.fsum(
            ledger.per_node.get(node_id, 0.0)
            for node_id in assignment.cluster_of(head_id)
        )
    return ledger
