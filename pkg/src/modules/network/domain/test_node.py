"""Unit tests for the NodeState entity."""

import pytest

from src.modules.core.domain.geometry import Point
from src.modules.network.domain.events import NodeDied, NodeRevived
from src.modules.network.domain.node import NodeRole, NodeState


def make_node(energy: float = 1.0, node_id: int = 0) -> NodeState:
    """Build a node at the origin."""
    return NodeState(id=node_id, position=Point(0.0, 0.0), energy=energy)


class TestNodeState:
    """Unit tests for NodeState."""

    def test_alive_follows_initial_energy(self):
        """Test that the alive flag is derived, not given."""
        assert make_node(1.0).alive is True
        assert make_node(0.0).alive is False
        assert NodeState(id=0, position=Point(0, 0), energy=1.0, alive=False).alive is True

    def test_rejects_negative_energy(self):
        """Test that a node cannot start with negative energy."""
        with pytest.raises(ValueError, match="negative"):
            make_node(-0.1)

    def test_debit_partial(self):
        """Test a debit the battery can pay."""
        node = make_node(1.0)

        assert node.debit(0.25, round_index=0, phase="member") == 0.25
        assert node.energy == 0.75
        assert node.alive is True
        assert node.domain_events == []

    def test_debit_clamps_and_raises_death(self):
        """Test that an overdraft drains only what is left and kills the node."""
        node = make_node(0.1, node_id=7)

        drained = node.debit(0.5, round_index=3, phase="head")

        assert drained == 0.1
        assert node.energy == 0.0
        assert node.alive is False
        assert node.pull_domain_events() == [
            NodeDied(aggregate_id=7, round_index=3, phase="head")
        ]

    def test_death_threshold(self):
        """Test that a node at its threshold is dead."""
        node = NodeState(id=0, position=Point(0, 0), energy=0.5, death_threshold=0.2)

        node.debit(0.3, round_index=0, phase="idle")

        assert node.alive is False

    def test_credit_clamps_at_capacity(self):
        """Test that a recharge never overfills the battery."""
        node = make_node(1.9)

        credited = node.credit(1.0, capacity=2.0, round_index=0, allow_revival=True)

        assert credited == pytest.approx(0.1)
        assert node.energy == pytest.approx(2.0)

    def test_credit_revives_dead_node(self):
        """Test revival when it is allowed."""
        node = make_node(0.0, node_id=2)

        node.credit(0.5, capacity=2.0, round_index=4, allow_revival=True)

        assert node.alive is True
        assert node.pull_domain_events() == [
            NodeRevived(aggregate_id=2, round_index=4, energy=0.5)
        ]

    def test_credit_ignored_by_dead_node_without_revival(self):
        """Test that dead nodes stay dead when revival is off."""
        node = make_node(0.0)

        assert node.credit(0.5, capacity=2.0, round_index=0, allow_revival=False) == 0.0
        assert node.energy == 0.0
        assert node.alive is False

    def test_role_cycle(self):
        """Test the head rotation counter across rounds."""
        node = make_node()
        assert node.is_eligible_head(round_index=0, epoch_length=20)

        node.serve_as_head()
        assert node.role is NodeRole.CLUSTER_HEAD
        node.end_round()
        assert node.role is NodeRole.UNASSIGNED
        assert node.rounds_since_ch == 1

        # Served in round 0: ineligible for the rest of the epoch.
        assert not node.is_eligible_head(round_index=1, epoch_length=20)
        assert not node.is_eligible_head(round_index=19, epoch_length=20)
        node.rounds_since_ch = 20
        assert node.is_eligible_head(round_index=20, epoch_length=20)

    def test_copy_is_independent(self):
        """Test that a copy shares no mutable state."""
        node = make_node(1.0)
        node.debit(2.0, round_index=0, phase="idle")
        clone = node.copy()

        clone.credit(1.0, capacity=2.0, round_index=1, allow_revival=True)

        assert node.energy == 0.0
        assert clone.energy == 1.0
        assert clone.domain_events == [NodeRevived(aggregate_id=0, round_index=1, energy=1.0)]
