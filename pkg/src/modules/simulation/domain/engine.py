"""Round loop of the simulator.

``step_round`` plays one round in a fixed phase order:

1. cluster-head election
2. member assignment and TDMA slot order
3. data round (energy debit, data credited to the base station)
4. the base station publishes the ledger
5. the harvester receives its budget
6. allocation per cluster and tour planning from the depot
7. visits and recharges within the round's time budget
8. metrics row

Events raised along the way are collected on the state in that order.
"""

import logging
import math
from dataclasses import dataclass, field

import numpy as np

from src.modules.core.domain.domain_event import BASE_STATION_ID
from src.modules.core.domain.entity import Entity
from src.modules.core.domain.event_dispatcher import EventDispatcher
from src.modules.harvester.domain.events import AllocationsPlanned
from src.modules.harvester.domain.harvester import (
    Harvester,
    allocate_per_cluster,
    execute_visits,
)
from src.modules.harvester.domain.tour import (
    Tour,
    TooManyWaypoints,
    Waypoint,
    exact_tour,
    plan_tour,
)
from src.modules.network.domain.clustering import (
    ClusterAssignment,
    NoAliveNodes,
    assign_members,
    hold_election,
    recharge_groups,
)
from src.modules.network.domain.config import SimConfig, ValidatedConfig, validate_config
from src.modules.network.domain.events import (
    ClusterHeadsElected,
    ClustersFormed,
    LedgerPublished,
)
from src.modules.network.domain.node import NodeState
from src.modules.network.domain.radio import EnergyLedger, charge_round
from src.modules.network.domain.topology import ELECT_STREAM, Deployment, deploy, split_stream
from src.modules.simulation.domain.events import NetworkDead, RoundCompleted
from src.modules.simulation.domain.metrics import RoundMetrics

logger = logging.getLogger(__name__)


@dataclass(eq=False)
class SimState(Entity):
    """Aggregate root of one run.

    Attributes:
        config: Validated configuration of the run.
        deployment: Fixed node placement.
        nodes: Mutable node states, indexed by id.
        harvester: The mobile charger.
        election_rng: Stream used by the cluster-head election.
        round_index: Rounds completed so far.
        previous_ledger: Ledger of the last completed round.
        metrics: One row per completed round.
        consumed_cumulative: Energy drained so far (J).
        data_bits_cumulative: Bits delivered to the base station so far.
        network_dead: Whether the last round started with no alive node.
    """

    config: ValidatedConfig
    deployment: Deployment
    nodes: list[NodeState]
    harvester: Harvester
    election_rng: np.random.Generator
    round_index: int = 0
    previous_ledger: EnergyLedger | None = None
    metrics: list[RoundMetrics] = field(default_factory=list)
    consumed_cumulative: float = 0.0
    data_bits_cumulative: int = 0
    network_dead: bool = False

    @classmethod
    def start(cls, config: ValidatedConfig) -> "SimState":
        """Deploy the network and park the harvester at its depot."""
        deployment = deploy(config)
        return cls(
            id=BASE_STATION_ID,
            config=config,
            deployment=deployment,
            nodes=deployment.fresh_nodes(),
            harvester=Harvester.at_depot(deployment.depot_position),
            election_rng=split_stream(config.rng_seed, ELECT_STREAM),
        )

    @property
    def sim_time(self) -> float:
        """Simulated time at the end of the last completed round (s)."""
        return self.round_index * self.config.round_duration

    @property
    def alive_count(self) -> int:
        """Number of alive nodes."""
        return sum(1 for node in self.nodes if node.alive)

    def collect_events(self) -> None:
        """Move pending node and harvester events onto the state's event log."""
        for node in self.nodes:
            for event in node.pull_domain_events():
                self.add_domain_event(event)
        for event in self.harvester.pull_domain_events():
            self.add_domain_event(event)


def _solve_tour(waypoints: list[Waypoint], config: SimConfig) -> Tour:
    depot = config.depot
    if config.tour_solver == "exact":
        try:
            return exact_tour(waypoints, depot)
        except TooManyWaypoints:
            logger.warning(
                "%d heads exceed the exact solver, using the heuristic tour",
                len(waypoints),
            )
    return plan_tour(waypoints, depot)


def _elect(state: SimState, config: SimConfig) -> ClusterAssignment | None:
    round_index = state.round_index
    fixed_count = (
        max(1, math.ceil(config.node_count * config.ch_probability))
        if config.fixed_ch_count
        else None
    )
    try:
        election = hold_election(
            state.nodes,
            round_index,
            config.ch_probability,
            state.election_rng,
            fixed_count,
        )
    except NoAliveNodes:
        if not state.network_dead:
            logger.info("Network dead at round %d", round_index)
            state.add_domain_event(
                NetworkDead(aggregate_id=state.id, round_index=round_index)
            )
        state.network_dead = True
        return None

    state.network_dead = False
    for head_id in election.heads:
        state.nodes[head_id].serve_as_head()
    assignment = assign_members(state.nodes, election.heads, round_index)
    for member_id in assignment.members:
        state.nodes[member_id].join_cluster()
    state.add_domain_event(
        ClusterHeadsElected(
            aggregate_id=state.id,
            round_index=round_index,
            heads=assignment.heads,
            forced=election.forced,
        )
    )
    state.add_domain_event(
        ClustersFormed(
            aggregate_id=state.id,
            round_index=round_index,
            tdma=tuple((head, assignment.tdma[head]) for head in assignment.heads),
        )
    )
    return assignment


def _recharge(
    state: SimState, config: SimConfig, assignment: ClusterAssignment | None
) -> tuple[float, int]:
    harvester = state.harvester
    params = config.harvest
    round_index = state.round_index
    budget = harvester.receive_budget(state.previous_ledger, params, round_index)
    if assignment is None or budget <= 0.0:
        harvester.return_to_depot(params)
        return 0.0, 0

    groups = recharge_groups(state.nodes, assignment)
    allocations = allocate_per_cluster(budget, state.previous_ledger, groups)
    tour = _solve_tour(
        [Waypoint(head, state.nodes[head].position) for head in assignment.heads], config
    )
    harvester.add_domain_event(
        AllocationsPlanned(
            aggregate_id=harvester.id,
            round_index=round_index,
            allocations=tuple((head, allocations[head]) for head in tour.head_ids),
            tour_length=tour.total_length,
        )
    )
    report = execute_visits(tour, allocations, config.round_duration, params)
    visited = set(report.visited)
    for waypoint in tour.waypoints:
        head = waypoint.head_id
        if head in visited:
            harvester.radiate(
                head,
                waypoint.position,
                [state.nodes[node_id] for node_id in groups[head]],
                allocations[head],
                params,
                config.battery_capacity,
                round_index,
            )
        else:
            harvester.forfeit(head, allocations[head], round_index)
    harvester.return_to_depot(params)
    return tour.total_length, len(report.visited)


def step_round(state: SimState, config: SimConfig) -> SimState:
    """Play one round and append its metrics row.

    Args:
        state: State after the previous round; mutated in place.
        config: The run's configuration.

    Returns:
        The same state, advanced by one round.

    Raises:
        ValueError: If the configured number of rounds has already been played.
    """
    if state.round_index >= config.total_rounds:
        raise ValueError(
            f"all {config.total_rounds} rounds already played (round {state.round_index})"
        )
    round_index = state.round_index

    assignment = _elect(state, config)
    ledger = EnergyLedger(round_index=round_index)
    if assignment is not None:
        ledger = charge_round(state.nodes, assignment, config)
        state.collect_events()
        state.add_domain_event(
            LedgerPublished(
                aggregate_id=state.id,
                round_index=round_index,
                network_total=ledger.network_total,
                per_cluster=tuple(
                    (head, ledger.per_cluster[head]) for head in assignment.heads
                ),
            )
        )

    tour_length, clusters_visited = 0.0, 0
    if config.harvester_enabled:
        tour_length, clusters_visited = _recharge(state, config, assignment)
        state.collect_events()

    state.previous_ledger = ledger
    state.consumed_cumulative += ledger.network_total
    state.data_bits_cumulative += config.packet_bits * len(ledger.forwarded_heads)
    for node in state.nodes:
        node.end_round()
    state.round_index += 1

    row = RoundMetrics(
        round_index=round_index,
        sim_time=state.sim_time,
        alive_count=state.alive_count,
        consumed_cumulative=state.consumed_cumulative,
        emitted_cumulative=state.harvester.emitted_cumulative,
        delivered_cumulative=state.harvester.delivered_cumulative,
        data_received_cumulative=state.data_bits_cumulative,
        ch_count=len(assignment.heads) if assignment is not None else 0,
        tour_length=tour_length,
        clusters_visited=clusters_visited,
    )
    state.metrics.append(row)
    state.add_domain_event(
        RoundCompleted(aggregate_id=state.id, round_index=round_index, metrics=row)
    )
    return state


def run(
    config: SimConfig, dispatcher: EventDispatcher | None = None
) -> list[RoundMetrics]:
    """Deploy the network and play every configured round.

    Args:
        config: Scenario configuration; validated here.
        dispatcher: Receives each round's events once the round is complete.

    Returns:
        The metrics time series, one row per round.

    Raises:
        InvalidConfig: If the configuration is invalid.
    """
    validated = validate_config(config)
    state = SimState.start(validated)
    for _ in range(validated.total_rounds):
        step_round(state, validated)
        events = state.pull_domain_events()
        if dispatcher is not None:
            dispatcher.dispatch(events)
    return state.metrics
