"""Unit tests for the radio energy model and the round debit."""

import math

import pytest

from src.modules.core.domain.geometry import Point
from src.modules.network.domain.clustering import assign_members
from src.modules.network.domain.config import RadioParams, SimConfig, validate_config
from src.modules.network.domain.events import AggregateForwarded, MemberReportSent, NodeDied
from src.modules.network.domain.node import NodeRole, NodeState
from src.modules.network.domain.radio import (
    aggregate_energy,
    charge_round,
    idle_sleep_energy,
    rx_energy,
    tx_energy,
)
from src.modules.network.domain.topology import deploy

RADIO = RadioParams()


class TestRadioModel:
    """Unit tests for the per-operation energy functions."""

    @pytest.mark.parametrize(
        "bits,d,expected",
        [(2000, 0.0, 1.0e-4), (2000, 10.0, 1.02e-4), (2000, 50.0, 1.5e-4)],
    )
    def test_tx_free_space(self, bits: int, d: float, expected: float):
        """Test E_elec·k + eps_fs·k·d² below the crossover."""
        assert tx_energy(bits, d, RADIO) == pytest.approx(expected)

    def test_tx_multipath(self):
        """Test E_elec·k + eps_mp·k·d⁴ beyond the crossover."""
        expected = 50e-9 * 2000 + 0.0013e-12 * 2000 * 100.0**4
        assert tx_energy(2000, 100.0, RADIO) == pytest.approx(expected)

    def test_tx_continuous_at_crossover(self):
        """Test that both regimes agree at d0."""
        d0 = RADIO.crossover_distance
        below = tx_energy(2000, math.nextafter(d0, 0.0), RADIO)
        at = tx_energy(2000, d0, RADIO)

        assert below == pytest.approx(at, rel=1e-9)

    def test_tx_grows_with_distance(self):
        """Test monotonicity in d."""
        costs = [tx_energy(2000, float(d), RADIO) for d in range(0, 200, 5)]

        assert costs == sorted(costs)

    def test_rx(self):
        """Test E_elec·k."""
        assert rx_energy(2000, RADIO) == pytest.approx(1.0e-4)

    @pytest.mark.parametrize("signals,expected", [(1, 1.0e-5), (10, 1.0e-4)])
    def test_aggregate(self, signals: int, expected: float):
        """Test E_DA·k per fused signal."""
        assert aggregate_energy(2000, signals, RADIO) == pytest.approx(expected)

    def test_head_listens_all_round(self):
        """Test P_listen·T + E_sample for a head."""
        cost = idle_sleep_energy(NodeRole.CLUSTER_HEAD, 20.0, 1.0, RADIO)

        assert cost == pytest.approx(2.001e-4)

    def test_member_listens_its_share(self):
        """Test the listen/sleep split of a member."""
        cost = idle_sleep_energy(NodeRole.MEMBER, 20.0, 0.5, RADIO)

        assert cost == pytest.approx(1e-4 + 1e-6 + 1e-7)

    @pytest.mark.parametrize("fraction", [-0.1, 1.1])
    def test_active_fraction_bounds(self, fraction: float):
        """Test that the active fraction must lie in [0, 1]."""
        with pytest.raises(ValueError, match="active_fraction"):
            idle_sleep_energy(NodeRole.MEMBER, 20.0, fraction, RADIO)


def pair(member_energy: float = 2.0, head_energy: float = 2.0) -> list[NodeState]:
    """A head 10 m below the base station and a member 10 m below the head."""
    return [
        NodeState(id=0, position=Point(50.0, 40.0), energy=head_energy),
        NodeState(id=1, position=Point(50.0, 30.0), energy=member_energy),
    ]


class TestChargeRound:
    """Unit tests for charge_round."""

    config = SimConfig(node_count=2, frames_per_round=1)

    def test_single_cluster_oracle(self):
        """Test every term of a one-member, one-frame round."""
        nodes = pair()

        ledger = charge_round(nodes, assign_members(nodes, [0]), self.config)

        member = 1.02e-4 + (1e-4 + 1e-6 + 1e-7)
        head = 1.0e-4 + 2.0e-5 + 1.02e-4 + 2.001e-4
        assert ledger.per_node[1] == pytest.approx(member)
        assert ledger.per_node[0] == pytest.approx(head)
        assert ledger.per_cluster[0] == pytest.approx(member + head)
        assert ledger.network_total == pytest.approx(member + head)
        assert ledger.forwarded_heads == [0]
        assert nodes[0].energy == pytest.approx(2.0 - head)

    def test_frames_scale_the_member_stream(self):
        """Test that a lone member streams every data slot of the round."""
        nodes = pair()
        config = SimConfig(node_count=2)

        ledger = charge_round(nodes, assign_members(nodes, [0]), config)

        frames = config.data_slots
        assert ledger.per_node[1] == pytest.approx(
            tx_energy(frames * 2000, 10.0, RADIO)
            + idle_sleep_energy(NodeRole.MEMBER, 20.0, 0.5, RADIO)
        )

    def test_member_that_cannot_pay_is_not_received(self):
        """Test that a member dying mid-stream delivers nothing."""
        nodes = pair(member_energy=5e-5)

        ledger = charge_round(nodes, assign_members(nodes, [0]), self.config)

        assert ledger.per_node[1] == pytest.approx(5e-5)
        assert nodes[1].alive is False
        head = 1.0e-5 + 1.02e-4 + 2.001e-4
        assert ledger.per_node[0] == pytest.approx(head)
        assert ledger.forwarded_heads == [0]
        events = nodes[1].pull_domain_events()
        assert NodeDied(aggregate_id=1, round_index=0, phase="member") in events
        assert MemberReportSent(
            aggregate_id=1, round_index=0, head_id=0, packets=1, delivered=False
        ) in events

    def test_head_that_dies_does_not_forward(self):
        """Test that a head out of energy never reaches the base station."""
        nodes = pair(head_energy=1.5e-4)

        ledger = charge_round(nodes, assign_members(nodes, [0]), self.config)

        assert ledger.forwarded_heads == []
        assert ledger.per_node[0] == pytest.approx(1.5e-4)
        assert nodes[0].alive is False
        assert AggregateForwarded(
            aggregate_id=0, round_index=0, bits=2000, received_streams=1, delivered=False
        ) in nodes[0].pull_domain_events()

    def test_dead_nodes_cost_nothing(self):
        """Test that a network that died after clustering drains nothing."""
        nodes = pair()
        assignment = assign_members(nodes, [0])
        for node in nodes:
            node.debit(5.0, round_index=0, phase="idle")

        ledger = charge_round(nodes, assignment, self.config)

        assert ledger.network_total == 0.0
        assert ledger.forwarded_heads == []

    def test_fifty_node_recount(self):
        """Test the ledger of a default 50-node round against a direct recount."""
        config = validate_config(SimConfig())
        nodes = deploy(config).fresh_nodes()
        heads = [3, 12, 27, 41]
        assignment = assign_members(nodes, heads)
        by_id = {node.id: node for node in nodes}

        ledger = charge_round(nodes, assignment, config)

        bs = config.base_station
        for head in heads:
            members = assignment.tdma[head]
            frames = config.frames_for(len(members))
            for member in members:
                d = by_id[member].position.distance_to(by_id[head].position)
                expected = tx_energy(frames * 2000, d, RADIO) + idle_sleep_energy(
                    NodeRole.MEMBER, 20.0, 0.5 / len(members), RADIO
                )
                assert ledger.per_node[member] == pytest.approx(expected)
            expected_head = (
                len(members) * rx_energy(frames * 2000, RADIO)
                + aggregate_energy(2000, 1 + frames * len(members), RADIO)
                + tx_energy(2000, by_id[head].position.distance_to(bs), RADIO)
                + idle_sleep_energy(NodeRole.CLUSTER_HEAD, 20.0, 1.0, RADIO)
            )
            assert ledger.per_node[head] == pytest.approx(expected_head)
        assert sorted(ledger.forwarded_heads) == heads
        assert ledger.network_total == pytest.approx(
            math.fsum(ledger.per_cluster.values())
        )
        assert ledger.network_total == pytest.approx(
            50 * 2.0 - math.fsum(node.energy for node in nodes)
        )
