"""Closed charger tours over cluster-head waypoints.

``plan_tour`` builds a nearest-neighbour tour from the depot and polishes it
with 2-opt; ``exact_tour`` solves small instances optimally with Held-Karp
dynamic programming and serves as the oracle for the heuristic.
"""

import math
from collections.abc import Sequence
from dataclasses import dataclass

from src.modules.core.domain.geometry import Point

MAX_EXACT_WAYPOINTS = 10
_IMPROVEMENT_EPS = 1e-12


class TooManyWaypoints(Exception):
    """Raised when the exact solver is asked for more than 10 waypoints."""

    pass


@dataclass(frozen=True)
class Waypoint:
    """A cluster-head stop.

    Attributes:
        head_id: Id of the cluster head.
        position: Where the harvester parks.
    """

    head_id: int
    position: Point


@dataclass(frozen=True)
class Tour:
    """A closed tour depot → waypoints → depot.

    Attributes:
        waypoints: Stops in visiting order.
        total_length: Closed length including both depot legs (m).
        start: The depot.
    """

    waypoints: tuple[Waypoint, ...]
    total_length: float
    start: Point

    @property
    def head_ids(self) -> tuple[int, ...]:
        """Head ids in visiting order."""
        return tuple(waypoint.head_id for waypoint in self.waypoints)


def tour_length(depot: Point, waypoints: Sequence[Waypoint]) -> float:
    """Closed length of visiting ``waypoints`` in order from and back to ``depot``."""
    if not waypoints:
        return 0.0
    stops = [depot, *(waypoint.position for waypoint in waypoints), depot]
    return math.fsum(a.distance_to(b) for a, b in zip(stops, stops[1:]))


def _make_tour(depot: Point, waypoints: Sequence[Waypoint]) -> Tour:
    return Tour(
        waypoints=tuple(waypoints),
        total_length=tour_length(depot, waypoints),
        start=depot,
    )


def nearest_neighbor_tour(heads: Sequence[Waypoint], depot: Point) -> Tour:
    """Greedy construction: always drive to the closest unvisited head.

    Ties go to the lower head id.
    """
    remaining = sorted(heads, key=lambda waypoint: waypoint.head_id)
    order: list[Waypoint] = []
    here = depot
    while remaining:
        nearest = min(
            remaining,
            key=lambda waypoint: (here.distance_to(waypoint.position), waypoint.head_id),
        )
        remaining.remove(nearest)
        order.append(nearest)
        here = nearest.position
    return _make_tour(depot, order)


def two_opt(tour: Tour) -> Tour:
    """Reverse segments while doing so shortens the closed tour.

    The depot stays fixed at both ends. Scans are in index order and the first
    improving move is applied, so the result is deterministic.
    """
    route = [tour.start, *(waypoint.position for waypoint in tour.waypoints)]
    order = list(tour.waypoints)
    count = len(order)
    improved = True
    while improved:
        improved = False
        for i in range(1, count):
            for j in range(i + 1, count + 1):
                a, b = route[i - 1], route[i]
                c = route[j]
                d = route[(j + 1) % (count + 1)]
                delta = (
                    a.distance_to(c) + b.distance_to(d) - a.distance_to(b) - c.distance_to(d)
                )
                if delta < -_IMPROVEMENT_EPS:
                    route[i : j + 1] = reversed(route[i : j + 1])
                    order[i - 1 : j] = reversed(order[i - 1 : j])
                    improved = True
                    break
            if improved:
                break
    return _make_tour(tour.start, order)


def plan_tour(heads: Sequence[Waypoint], depot: Point) -> Tour:
    """Heuristic closed tour: nearest neighbour followed by 2-opt.

    Args:
        heads: Cluster-head waypoints, at least one.
        depot: Start and end of the tour.

    Returns:
        The improved tour.

    Raises:
        ValueError: If ``heads`` is empty.
    """
    if not heads:
        raise ValueError("a tour needs at least one waypoint")
    return two_opt(nearest_neighbor_tour(heads, depot))


def exact_tour(heads: Sequence[Waypoint], depot: Point) -> Tour:
    """Optimal closed tour by Held-Karp dynamic programming over subsets.

    Args:
        heads: Cluster-head waypoints, at least one and at most 10.
        depot: Start and end of the tour.

    Returns:
        A minimum-length tour.

    Raises:
        TooManyWaypoints: If more than 10 waypoints are given.
        ValueError: If ``heads`` is empty.
    """
    if len(heads) > MAX_EXACT_WAYPOINTS:
        raise TooManyWaypoints(
            f"exact tour supports at most {MAX_EXACT_WAYPOINTS} waypoints, got {len(heads)}"
        )
    if not heads:
        raise ValueError("a tour needs at least one waypoint")
    stops = sorted(heads, key=lambda waypoint: waypoint.head_id)
    count = len(stops)
    from_depot = [depot.distance_to(stop.position) for stop in stops]
    between = [[a.position.distance_to(b.position) for b in stops] for a in stops]

    # best[(mask, last)] = (length of a path depot → mask ending at last, predecessor)
    best: dict[tuple[int, int], tuple[float, int]] = {
        (1 << k, k): (from_depot[k], -1) for k in range(count)
    }
    for mask in range(1, 1 << count):
        for last in range(count):
            if (mask, last) not in best:
                continue
            length, _ = best[(mask, last)]
            for nxt in range(count):
                if mask & (1 << nxt):
                    continue
                key = (mask | (1 << nxt), nxt)
                candidate = length + between[last][nxt]
                if key not in best or candidate < best[key][0]:
                    best[key] = (candidate, last)

    full = (1 << count) - 1
    last = min(
        range(count), key=lambda k: (best[(full, k)][0] + from_depot[k], k)
    )
    order: list[Waypoint] = []
    mask = full
    while last != -1:
        order.append(stops[last])
        _, previous = best[(mask, last)]
        mask &= ~(1 << last)
        last = previous
    order.reverse()
    return _make_tour(depot, order)
