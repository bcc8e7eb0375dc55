"""Unit tests for LEACH election and cluster formation."""

import pytest

from src.modules.core.domain.geometry import Point
from src.modules.network.domain.clustering import (
    NoAliveNodes,
    assign_members,
    elect_heads,
    election_threshold,
    hold_election,
    recharge_groups,
)
from src.modules.network.domain.config import SimConfig, validate_config
from src.modules.network.domain.node import NodeState
from src.modules.network.domain.topology import ELECT_STREAM, deploy, split_stream


class ConstantSource:
    """Uniform source that always draws the same value."""

    def __init__(self, value: float) -> None:
        """Store the value to draw."""
        self.value = value

    def random(self) -> float:
        """Return the stored value."""
        return self.value


def node_at(node_id: int, x: float, y: float, energy: float = 1.0) -> NodeState:
    """Build a node at ``(x, y)``."""
    return NodeState(id=node_id, position=Point(x, y), energy=energy)


class TestElectionThreshold:
    """Unit tests for election_threshold."""

    def test_first_round_of_epoch_is_p(self):
        """Test T = p at the start of an epoch."""
        assert election_threshold(0.05, 0) == pytest.approx(0.05)
        assert election_threshold(0.05, 20) == pytest.approx(0.05)

    def test_grows_through_the_epoch(self):
        """Test T = p / (1 - p·(r mod 1/p))."""
        assert election_threshold(0.05, 10) == pytest.approx(0.05 / 0.5)

    def test_last_round_of_epoch_is_one(self):
        """Test that every remaining candidate serves in the epoch's last round."""
        assert election_threshold(0.05, 19) == 1.0
        assert election_threshold(0.1, 9) == 1.0


class TestElectHeads:
    """Unit tests for elect_heads and hold_election."""

    def test_probability_one_elects_every_alive_node(self):
        """Test that p = 1 makes every alive node a head."""
        nodes = [node_at(i, i, 0.0) for i in range(5)]
        nodes[2].debit(5.0, round_index=0, phase="idle")

        heads = elect_heads(nodes, 0, 1.0, split_stream(1, ELECT_STREAM))

        assert heads == [0, 1, 3, 4]

    def test_zero_heads_forces_the_strongest_candidate(self):
        """Test the repair: highest energy, ties to the lowest id."""
        nodes = [
            node_at(0, 0, 0, energy=1.0),
            node_at(1, 1, 0, energy=1.5),
            node_at(2, 2, 0, energy=1.5),
            node_at(3, 3, 0, energy=0.5),
        ]

        election = hold_election(nodes, 0, 0.05, ConstantSource(0.99))

        assert election.heads == [1]
        assert election.forced is True

    def test_repair_skips_nodes_that_already_served(self):
        """Test that the forced head comes from the candidate set."""
        nodes = [node_at(0, 0, 0, energy=2.0), node_at(1, 1, 0, energy=1.0)]
        nodes[0].rounds_since_ch = 1

        election = hold_election(nodes, 1, 0.05, ConstantSource(0.99))

        assert election.heads == [1]

    def test_repair_falls_back_to_alive_nodes(self):
        """Test that an empty candidate set still yields a head."""
        nodes = [node_at(0, 0, 0, energy=2.0), node_at(1, 1, 0, energy=1.0)]
        for node in nodes:
            node.rounds_since_ch = 1

        election = hold_election(nodes, 1, 0.05, ConstantSource(0.99))

        assert election.heads == [0]
        assert election.forced is True

    def test_no_alive_nodes(self):
        """Test that an election on a dead network raises."""
        nodes = [node_at(0, 0, 0, energy=0.0)]

        with pytest.raises(NoAliveNodes):
            elect_heads(nodes, 0, 0.05, ConstantSource(0.0))

    def test_fixed_count(self):
        """Test that fixed-count mode elects exactly k heads, candidates first."""
        nodes = [node_at(i, i, 0.0) for i in range(10)]
        nodes[0].rounds_since_ch = 1

        heads = elect_heads(nodes, 1, 0.1, split_stream(3, ELECT_STREAM), fixed_count=3)

        assert len(heads) == 3
        assert heads == sorted(heads)
        assert 0 not in heads

    def test_rotation_over_many_rounds(self):
        """Test about n·p heads per round and one turn per node per epoch."""
        config = validate_config(SimConfig(node_count=100, ch_probability=0.05))
        nodes = deploy(config).fresh_nodes()
        rng = split_stream(config.rng_seed, ELECT_STREAM)
        counts: list[int] = []
        served_in_epoch: set[int] = set()

        for round_index in range(2000):
            heads = elect_heads(nodes, round_index, 0.05, rng)
            counts.append(len(heads))
            served_in_epoch.update(heads)
            for head in heads:
                nodes[head].serve_as_head()
            for node in nodes:
                node.end_round()
            if round_index % config.epoch_length == config.epoch_length - 1:
                assert served_in_epoch == set(range(100))
                served_in_epoch.clear()

        assert 4.0 <= sum(counts) / len(counts) <= 6.0


class TestAssignMembers:
    """Unit tests for assign_members."""

    def test_nearest_head_with_tie_to_lower_id(self):
        """Test that an equidistant member joins the lower head id."""
        nodes = [
            node_at(0, 5.0, 0.0),
            node_at(3, 0.0, 0.0),
            node_at(5, 10.0, 0.0),
            node_at(6, 9.0, 0.0),
        ]

        assignment = assign_members(nodes, [5, 3], round_index=2)

        assert assignment.heads == (3, 5)
        assert assignment.members == {0: 3, 6: 5}
        assert assignment.tdma == {3: (0,), 5: (6,)}
        assert assignment.cluster_of(5) == (5, 6)
        assert assignment.round_index == 2

    def test_dead_nodes_are_left_out(self):
        """Test that dead nodes join no cluster."""
        nodes = [node_at(0, 0, 0), node_at(1, 1, 0), node_at(2, 2, 0, energy=0.0)]

        assignment = assign_members(nodes, [0])

        assert assignment.members == {1: 0}

    def test_requires_alive_heads(self):
        """Test the head preconditions."""
        nodes = [node_at(0, 0, 0), node_at(1, 1, 0, energy=0.0)]

        with pytest.raises(ValueError, match="at least one"):
            assign_members(nodes, [])
        with pytest.raises(ValueError, match="alive"):
            assign_members(nodes, [1])

    def test_matches_brute_force(self):
        """Test the assignment against an exhaustive nearest-head search."""
        config = validate_config(SimConfig(node_count=60, rng_seed=11))
        nodes = deploy(config).fresh_nodes()
        heads = [4, 17, 33, 52]

        assignment = assign_members(nodes, heads)

        for node in nodes:
            if node.id in heads:
                continue
            distances = [(node.position.distance_to(nodes[h].position), h) for h in heads]
            assert assignment.members[node.id] == min(distances)[1]
        assert sorted(assignment.members) == sorted(set(range(60)) - set(heads))


class TestRechargeGroups:
    """Unit tests for recharge_groups."""

    def test_dead_nodes_attach_to_nearest_head(self):
        """Test that a stop reaches its cluster and nearby dead nodes."""
        nodes = [
            node_at(0, 0.0, 0.0),
            node_at(1, 100.0, 0.0),
            node_at(2, 10.0, 0.0),
            node_at(3, 90.0, 0.0, energy=0.0),
            node_at(4, 5.0, 0.0, energy=0.0),
        ]
        assignment = assign_members(nodes, [0, 1])

        groups = recharge_groups(nodes, assignment)

        assert groups == {0: (0, 2, 4), 1: (1, 3)}
