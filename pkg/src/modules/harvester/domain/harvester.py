"""Mobile harvester entity and its per-round operations.

The harvester gets a budget from the power station based on what the network
drained in the previous round, splits it over the current clusters, tours the
cluster heads within the round's time budget, and at every stop radiates its
allocation to the whole cluster following E_n = E_c + E_h / max(d, d_min)².
"""

import logging
import math
from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field

from src.modules.core.domain.domain_event import HARVESTER_ID
from src.modules.core.domain.entity import Entity
from src.modules.core.domain.geometry import Point
from src.modules.harvester.domain.events import (
    BudgetReceived,
    ClusterRecharged,
    StopSkipped,
)
from src.modules.harvester.domain.tour import Tour
from src.modules.network.domain.config import HarvestParams
from src.modules.network.domain.node import NodeState
from src.modules.network.domain.radio import EnergyLedger

logger = logging.getLogger(__name__)


def compute_budget(
    prev_ledger: EnergyLedger | None, params: HarvestParams, carried: float = 0.0
) -> float:
    """Energy the power station hands over for this round.

    Args:
        prev_ledger: Previous round's ledger; ``None`` before the first round.
        params: Harvester parameters.
        carried: Forfeited energy rolled over from the previous round.

    Returns:
        ``min(transfer_efficiency × previous consumption + carried, capacity)``;
        zero when there is no previous round.
    """
    if prev_ledger is None:
        return 0.0
    requested = params.transfer_efficiency * prev_ledger.network_total + carried
    return min(requested, params.harvester_capacity)


def allocate_per_cluster(
    budget: float, prev_ledger: EnergyLedger | None, groups: Mapping[int, Sequence[int]]
) -> dict[int, float]:
    """Split the budget over the current clusters by previous consumption.

    Each cluster's share is the previous-round consumption of the nodes now in
    it, over the total of all current clusters. Without any previous
    consumption the split is even. The last entry absorbs the rounding
    remainder. Every share is a whole multiple of ``math.ulp(budget)``, so
    the allocations add up to the budget exactly.

    Args:
        budget: Round budget (J).
        prev_ledger: Previous round's ledger.
        groups: Head id to the node ids now in its cluster.

    Returns:
        Head id to allocated energy, in ascending head order.
    """
    heads = sorted(groups)
    if not heads:
        return {}
    if budget <= 0.0:
        return {head: 0.0 for head in heads}
    previous = prev_ledger.per_node if prev_ledger is not None else {}
    weights = [
        math.fsum(previous.get(node_id, 0.0) for node_id in groups[head]) for head in heads
    ]
    total = math.fsum(weights)
    if total <= 0.0:
        weights, total = [1.0] * len(heads), float(len(heads))
    quantum = math.ulp(budget)
    units = round(budget / quantum)
    taken = 0
    allocations: dict[int, float] = {}
    for head, weight in zip(heads[:-1], weights[:-1]):
        share = min(math.floor(budget * weight / total / quantum), units - taken)
        taken += share
        allocations[head] = share * quantum
    allocations[heads[-1]] = (units - taken) * quantum
    return allocations


def recharge_cluster(
    nodes: Sequence[NodeState],
    head_position: Point,
    e_h_cluster: float,
    params: HarvestParams,
    battery_capacity: float,
    round_index: int = 0,
) -> dict[int, float]:
    """Radiate ``e_h_cluster`` from the head position to a whole cluster.

    Node i gains ``e_h_cluster / max(d_i, d_min)²``, clamped at the battery
    capacity. Dead nodes gain only when revival is allowed. With
    ``conserve_emission`` the offers are scaled down so the cluster never
    stores more than was radiated.

    Returns:
        Node id to the energy actually credited.
    """
    if e_h_cluster <= 0.0:
        return {}
    offered = {
        node.id: e_h_cluster / max(node.position.distance_to(head_position), params.d_min) ** 2
        for node in nodes
    }
    scale = 1.0
    if params.conserve_emission:
        total = math.fsum(offered.values())
        if total > e_h_cluster:
            scale = e_h_cluster / total
            while math.fsum(v * scale for v in offered.values()) > e_h_cluster:
                scale = math.nextafter(scale, 0.0)
    return {
        node.id: node.credit(
            offered[node.id] * scale, battery_capacity, round_index, params.allow_revival
        )
        for node in nodes
    }


@dataclass(frozen=True)
class VisitReport:
    """What the harvester managed within one round.

    Attributes:
        visited: Head ids recharged, in tour order.
        skipped: Head ids that did not fit in the time budget.
        total_time: Travel and dwell time including the return leg (s).
        traveled: Distance actually driven including the return leg (m).
    """

    visited: tuple[int, ...]
    skipped: tuple[int, ...]
    total_time: float
    traveled: float


def execute_visits(
    tour: Tour,
    allocations: Mapping[int, float],
    time_budget: float,
    params: HarvestParams,
) -> VisitReport:
    """Walk the tour and keep the stops that fit in the time budget.

    A stop is visited when the elapsed time plus the leg from the current
    position plus the dwell still fits; otherwise it is skipped and the
    harvester stays where it is. The return leg to the depot is not part of
    the fit test.

    Args:
        tour: Planned closed tour.
        allocations: Head id to allocated energy over the same heads.
        time_budget: Time available this round (s).
        params: Harvester parameters.

    Returns:
        The visit report.

    Raises:
        ValueError: If the tour and the allocations cover different heads.
    """
    if set(tour.head_ids) != set(allocations):
        raise ValueError("tour and allocations must cover the same heads")
    here = tour.start
    elapsed = 0.0
    traveled = 0.0
    visited: list[int] = []
    skipped: list[int] = []
    for waypoint in tour.waypoints:
        leg = here.distance_to(waypoint.position)
        arrival = elapsed + leg / params.harvester_speed + params.dwell_time
        if arrival <= time_budget:
            visited.append(waypoint.head_id)
            elapsed = arrival
            traveled += leg
            here = waypoint.position
        else:
            skipped.append(waypoint.head_id)
    home = here.distance_to(tour.start)
    return VisitReport(
        visited=tuple(visited),
        skipped=tuple(skipped),
        total_time=elapsed + home / params.harvester_speed,
        traveled=traveled + home,
    )


@dataclass(eq=False)
class Harvester(Entity):
    """The mobile charger's state machine.

    Attributes:
        depot: Power-station location, start and end of every tour.
        position: Current location.
        budget: Energy still on board for this round (J).
        emitted_cumulative: Energy radiated since the start of the run (J).
        delivered_cumulative: Energy stored by nodes since the start of the run (J).
        carried: Forfeited energy waiting for the next round (J).
    """

    depot: Point = field(default_factory=lambda: Point(0.0, 0.0))
    position: Point = field(default_factory=lambda: Point(0.0, 0.0))
    budget: float = 0.0
    emitted_cumulative: float = 0.0
    delivered_cumulative: float = 0.0
    carried: float = 0.0

    @classmethod
    def at_depot(cls, depot: Point) -> "Harvester":
        """Create a harvester parked at its depot with an empty budget."""
        return cls(id=HARVESTER_ID, depot=depot, position=depot)

    def receive_budget(
        self, prev_ledger: EnergyLedger | None, params: HarvestParams, round_index: int
    ) -> float:
        """Load this round's budget from the power station.

        Returns:
            The budget.
        """
        carried = self.carried if params.carry_over else 0.0
        self.carried = 0.0
        self.budget = compute_budget(prev_ledger, params, carried)
        self.add_domain_event(
            BudgetReceived(
                aggregate_id=self.id,
                round_index=round_index,
                budget=self.budget,
                previous_consumption=(
                    prev_ledger.network_total if prev_ledger is not None else 0.0
                ),
            )
        )
        return self.budget

    def radiate(
        self,
        head_id: int,
        head_position: Point,
        cluster: Sequence[NodeState],
        e_h_cluster: float,
        params: HarvestParams,
        battery_capacity: float,
        round_index: int,
    ) -> float:
        """Park at a head and radiate its allocation to the cluster.

        Returns:
            Energy actually stored by the cluster.
        """
        self.position = head_position
        emitted = min(e_h_cluster, self.budget)
        gains = recharge_cluster(
            cluster, head_position, emitted, params, battery_capacity, round_index
        )
        delivered = math.fsum(gains.values())
        self.budget -= emitted
        self.emitted_cumulative += emitted
        self.delivered_cumulative += delivered
        self.add_domain_event(
            ClusterRecharged(
                aggregate_id=self.id,
                round_index=round_index,
                head_id=head_id,
                emitted=emitted,
                delivered=delivered,
            )
        )
        return delivered

    def forfeit(self, head_id: int, allocation: float, round_index: int) -> None:
        """Give up a skipped stop's allocation."""
        self.add_domain_event(
            StopSkipped(
                aggregate_id=self.id,
                round_index=round_index,
                head_id=head_id,
                forfeited=allocation,
            )
        )
        logger.debug("Round %d skipped head %d (%.3g J)", round_index, head_id, allocation)

    def return_to_depot(self, params: HarvestParams) -> None:
        """Drive home and settle what is left on board."""
        self.position = self.depot
        if params.carry_over:
            self.carried = self.budget
        self.budget = 0.0
