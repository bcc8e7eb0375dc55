"""Unit tests for charger tour planning."""

import itertools

import numpy as np
import pytest

from src.modules.core.domain.geometry import Point
from src.modules.harvester.domain.tour import (
    TooManyWaypoints,
    Tour,
    Waypoint,
    exact_tour,
    nearest_neighbor_tour,
    plan_tour,
    tour_length,
    two_opt,
)

DEPOT = Point(0.0, 0.0)


def random_waypoints(rng: np.random.Generator, count: int) -> list[Waypoint]:
    """Scatter ``count`` heads over a 100 m square."""
    return [
        Waypoint(head_id=i, position=Point(float(x), float(y)))
        for i, (x, y) in enumerate(rng.uniform(0.0, 100.0, size=(count, 2)))
    ]


class TestPlanTour:
    """Unit tests for the heuristic tour."""

    def test_single_head_is_out_and_back(self):
        """Test that one head gives twice the depot distance."""
        tour = plan_tour([Waypoint(4, Point(3.0, 4.0))], DEPOT)

        assert tour.head_ids == (4,)
        assert tour.total_length == pytest.approx(10.0)
        assert tour.start == DEPOT

    def test_collinear_heads_in_order(self):
        """Test that heads on a line are visited outwards."""
        heads = [
            Waypoint(2, Point(30.0, 0.0)),
            Waypoint(0, Point(10.0, 0.0)),
            Waypoint(1, Point(20.0, 0.0)),
        ]

        tour = plan_tour(heads, DEPOT)

        assert tour.head_ids == (0, 1, 2)
        assert tour.total_length == pytest.approx(60.0)

    def test_requires_a_head(self):
        """Test the non-empty precondition."""
        with pytest.raises(ValueError, match="at least one"):
            plan_tour([], DEPOT)

    def test_two_opt_removes_a_crossing(self):
        """Test that a crossing tour is untangled."""
        heads = [
            Waypoint(0, Point(0.0, 10.0)),
            Waypoint(1, Point(10.0, 0.0)),
            Waypoint(2, Point(10.0, 10.0)),
        ]
        crossed = Tour(
            waypoints=tuple(heads), total_length=tour_length(DEPOT, heads), start=DEPOT
        )

        untangled = two_opt(crossed)

        assert untangled.total_length == pytest.approx(40.0)
        assert untangled.total_length < crossed.total_length

    def test_deterministic(self):
        """Test that equal inputs give equal tours."""
        heads = random_waypoints(np.random.default_rng(5), 8)

        assert plan_tour(heads, DEPOT) == plan_tour(heads, DEPOT)

    def test_close_to_optimal_on_random_instances(self):
        """Test the heuristic against the exact oracle on 100 instances."""
        rng = np.random.default_rng(2024)

        for _ in range(100):
            heads = random_waypoints(rng, int(rng.integers(3, 9)))
            depot = Point(-10.0, 50.0)
            nearest = nearest_neighbor_tour(heads, depot)
            heuristic = plan_tour(heads, depot)
            optimal = exact_tour(heads, depot)

            assert heuristic.total_length <= nearest.total_length + 1e-9
            assert heuristic.total_length >= optimal.total_length - 1e-9
            assert heuristic.total_length <= 1.2 * optimal.total_length

    def test_seven_heads_within_fifteen_percent(self):
        """Test a fixed seven-head instance against the oracle."""
        heads = random_waypoints(np.random.default_rng(7), 7)

        ratio = plan_tour(heads, DEPOT).total_length / exact_tour(heads, DEPOT).total_length

        assert ratio <= 1.15


class TestExactTour:
    """Unit tests for the Held-Karp oracle."""

    def test_single_head_matches_heuristic(self):
        """Test that a unique tour is found by both solvers."""
        heads = [Waypoint(0, Point(30.0, 40.0))]

        assert exact_tour(heads, DEPOT) == plan_tour(heads, DEPOT)

    def test_matches_permutation_enumeration(self):
        """Test three heads against all six orders."""
        heads = random_waypoints(np.random.default_rng(1), 3)

        best = min(tour_length(DEPOT, order) for order in itertools.permutations(heads))

        assert exact_tour(heads, DEPOT).total_length == pytest.approx(best)

    def test_square_corners(self):
        """Test the perimeter tour of a 10 m square from the middle of one side."""
        depot = Point(5.0, 0.0)
        heads = [
            Waypoint(0, Point(0.0, 0.0)),
            Waypoint(1, Point(10.0, 10.0)),
            Waypoint(2, Point(10.0, 0.0)),
            Waypoint(3, Point(0.0, 10.0)),
        ]

        tour = exact_tour(heads, depot)

        assert tour.total_length == pytest.approx(40.0)
        assert tour.head_ids in {(0, 3, 1, 2), (2, 1, 3, 0)}

    def test_too_many_waypoints(self):
        """Test the size limit of the oracle."""
        heads = random_waypoints(np.random.default_rng(0), 11)

        with pytest.raises(TooManyWaypoints):
            exact_tour(heads, DEPOT)
