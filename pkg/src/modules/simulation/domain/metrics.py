"""Round metrics value object."""

from dataclasses import dataclass


@dataclass(frozen=True)
class RoundMetrics:
    """One row of the output time series.

    Attributes:
        round_index: Zero-based round.
        sim_time: Simulated time at the end of the round (s).
        alive_count: Alive nodes at the end of the round.
        consumed_cumulative: Energy drained from the network so far (J).
        emitted_cumulative: Energy radiated by the harvester so far (J).
        delivered_cumulative: Energy stored by nodes from recharges so far (J).
        data_received_cumulative: Bits delivered to the base station so far.
        ch_count: Cluster heads this round.
        tour_length: Planned closed-tour length this round (m).
        clusters_visited: Stops recharged this round.
    """

    round_index: int
    sim_time: float
    alive_count: int
    consumed_cumulative: float
    emitted_cumulative: float
    delivered_cumulative: float
    data_received_cumulative: int
    ch_count: int
    tour_length: float
    clusters_visited: int
