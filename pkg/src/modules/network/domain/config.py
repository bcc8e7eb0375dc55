"""Simulation configuration module.

This module defines the scenario parameters (geometry, radio and harvesting
constants, round timing, seeds) and the validation that turns a raw
``SimConfig`` into a ``ValidatedConfig``.
"""

import math
from dataclasses import dataclass, field
from typing import Literal, NewType

from src.modules.core.domain.geometry import Point

TourSolver = Literal["heuristic", "exact"]
TOUR_SOLVERS: tuple[TourSolver, ...] = ("heuristic", "exact")

DEPOT_OFFSET_M = 10.0


class InvalidConfig(Exception):
    """Raised when a configuration violates one or more invariants.

    Attributes:
        violations: One human-readable entry per violated field and bound.
    """

    def __init__(self, violations: list[str]) -> None:
        """Initialize with the list of violations."""
        self.violations: list[str] = violations
        super().__init__("invalid configuration: " + "; ".join(violations))


@dataclass(frozen=True)
class RadioParams:
    """First-order radio model and node power-state constants.

    Attributes:
        e_elec: Electronics cost per bit for transmit and receive (J/bit).
        eps_fs: Free-space amplifier coefficient (J/bit/m²).
        eps_mp: Multipath amplifier coefficient (J/bit/m⁴).
        e_aggregate: Aggregation cost at the cluster head (J/bit/signal).
        p_listen: Idle listening power (W).
        p_sleep: Sleep power (W).
        e_sample: Energy of one sensing sample (J).
        death_threshold: Energy at or below which a node is not alive (J).
    """

    e_elec: float = 50e-9
    eps_fs: float = 10e-12
    eps_mp: float = 0.0013e-12
    e_aggregate: float = 5e-9
    p_listen: float = 1e-5
    p_sleep: float = 1e-7
    e_sample: float = 1e-7
    death_threshold: float = 0.0

    @property
    def crossover_distance(self) -> float:
        """Distance d0 where the free-space and multipath laws meet.

        Returns ``math.inf`` when the multipath coefficient is zero, i.e. the
        free-space law applies at every distance.
        """
        if self.eps_mp == 0.0:
            return math.inf
        return math.sqrt(self.eps_fs / self.eps_mp)

    def violations(self) -> list[str]:
        """List every violated radio invariant."""
        errors: list[str] = []
        for name in (
            "e_elec",
            "eps_fs",
            "eps_mp",
            "e_aggregate",
            "p_listen",
            "p_sleep",
            "e_sample",
            "death_threshold",
        ):
            value: float = getattr(self, name)
            if not math.isfinite(value) or value < 0:
                errors.append(f"radio.{name} must be a finite value >= 0, got {value}")
        if self.p_sleep > self.p_listen:
            errors.append(
                f"radio.p_sleep must be <= radio.p_listen, got {self.p_sleep} > {self.p_listen}"
            )
        if self.eps_mp > 0 and self.eps_fs == 0:
            errors.append("radio.eps_fs must be > 0 when radio.eps_mp > 0")
        return errors


@dataclass(frozen=True)
class HarvestParams:
    """Mobile harvester parameters.

    Attributes:
        transfer_efficiency: Ratio of budget to previous-round network consumption.
        d_min: Clamp floor of the distance in the recharge law (m).
        dwell_time: Time spent at each cluster-head stop (s).
        harvester_speed: Travel speed (m/s).
        harvester_capacity: Maximum budget per round (J).
        allow_revival: Whether a recharge can bring a dead node back.
        carry_over: Whether allocations of skipped stops roll into the next budget.
        conserve_emission: Whether a stop's gains are scaled so they never exceed
            what the harvester radiated there; off gives unscaled broadcast gains.
    """

    transfer_efficiency: float = 1.0
    d_min: float = 1.0
    dwell_time: float = 1.0
    harvester_speed: float = 5.0
    harvester_capacity: float = 100.0
    allow_revival: bool = True
    carry_over: bool = False
    conserve_emission: bool = True

    def violations(self) -> list[str]:
        """List every violated harvester invariant."""
        errors: list[str] = []
        if not 0 < self.transfer_efficiency <= 1:
            errors.append(
                f"harvest.transfer_efficiency must be in (0, 1], got {self.transfer_efficiency}"
            )
        if not self.d_min > 0:
            errors.append(f"harvest.d_min must be > 0, got {self.d_min}")
        if not self.dwell_time >= 0:
            errors.append(f"harvest.dwell_time must be >= 0, got {self.dwell_time}")
        if not self.harvester_speed > 0:
            errors.append(
                f"harvest.harvester_speed must be > 0, got {self.harvester_speed}"
            )
        if not self.harvester_capacity > 0:
            errors.append(
                f"harvest.harvester_capacity must be > 0, got {self.harvester_capacity}"
            )
        return errors


@dataclass(frozen=True)
class SimConfig:
    """All scenario parameters of one simulation run.

    ``bs_position`` and ``depot_position`` left as ``None`` resolve to the area
    center and to a point 10 m left of the area at mid height.
    """

    area_width: float = 100.0
    area_height: float = 100.0
    node_count: int = 50
    ch_probability: float = 0.05
    initial_energy: float = 2.0
    battery_capacity: float = 2.0
    round_duration: float = 20.0
    total_rounds: int = 50
    packet_bits: int = 2000
    radio: RadioParams = field(default_factory=RadioParams)
    harvest: HarvestParams = field(default_factory=HarvestParams)
    bs_position: Point | None = None
    depot_position: Point | None = None
    rng_seed: int = 42
    harvester_enabled: bool = True
    bit_rate: float = 1e6
    data_phase_fraction: float = 0.5
    frames_per_round: int | None = None
    fixed_ch_count: bool = False
    tour_solver: TourSolver = "heuristic"

    @property
    def base_station(self) -> Point:
        """Resolved base-station position."""
        if self.bs_position is not None:
            return self.bs_position
        return Point(self.area_width / 2, self.area_height / 2)

    @property
    def depot(self) -> Point:
        """Resolved harvester depot position."""
        if self.depot_position is not None:
            return self.depot_position
        return Point(-DEPOT_OFFSET_M, self.area_height / 2)

    @property
    def epoch_length(self) -> int:
        """Number of rounds in one LEACH rotation epoch, ⌈1/p⌉."""
        return math.ceil(1.0 / self.ch_probability)

    @property
    def data_slots(self) -> int:
        """TDMA data slots available to one cluster in one round."""
        data_bits = self.round_duration * self.data_phase_fraction * self.bit_rate
        return math.floor(data_bits / self.packet_bits)

    def frames_for(self, slots: int) -> int:
        """Packets each member sends in a round when its cluster has ``slots`` members."""
        if self.frames_per_round is not None:
            return self.frames_per_round
        if slots <= 0:
            return 0
        return max(1, self.data_slots // slots)


ValidatedConfig = NewType("ValidatedConfig", SimConfig)


def _config_violations(config: SimConfig) -> list[str]:
    errors: list[str] = []
    if not config.area_width > 0:
        errors.append(f"area_width must be > 0, got {config.area_width}")
    if not config.area_height > 0:
        errors.append(f"area_height must be > 0, got {config.area_height}")
    if config.node_count < 1:
        errors.append(f"node_count must be >= 1, got {config.node_count}")
    if not 0 < config.ch_probability <= 1:
        errors.append(f"ch_probability must be in (0, 1], got {config.ch_probability}")
    if not 0 < config.initial_energy <= config.battery_capacity:
        errors.append(
            "initial_energy must satisfy 0 < initial_energy <= battery_capacity, "
            f"got {config.initial_energy} (capacity {config.battery_capacity})"
        )
    if not config.round_duration > 0:
        errors.append(f"round_duration must be > 0, got {config.round_duration}")
    if config.total_rounds < 0:
        errors.append(f"total_rounds must be >= 0, got {config.total_rounds}")
    if config.packet_bits <= 0:
        errors.append(f"packet_bits must be > 0, got {config.packet_bits}")
    if not config.bit_rate > 0:
        errors.append(f"bit_rate must be > 0, got {config.bit_rate}")
    if not 0 < config.data_phase_fraction <= 1:
        errors.append(
            f"data_phase_fraction must be in (0, 1], got {config.data_phase_fraction}"
        )
    if config.frames_per_round is not None and config.frames_per_round < 1:
        errors.append(f"frames_per_round must be >= 1, got {config.frames_per_round}")
    if not 0 <= config.rng_seed < 2**64:
        errors.append(f"rng_seed must be a 64-bit unsigned integer, got {config.rng_seed}")
    if config.tour_solver not in TOUR_SOLVERS:
        errors.append(
            f"tour_solver must be one of {', '.join(TOUR_SOLVERS)}, got {config.tour_solver!r}"
        )
    if config.area_width > 0 and config.area_height > 0:
        if config.depot.inside(config.area_width, config.area_height):
            errors.append(
                f"depot_position {config.depot} must lie outside the deployment area"
            )
    errors.extend(config.radio.violations())
    errors.extend(config.harvest.violations())
    return errors


def validate_config(config: SimConfig) -> ValidatedConfig:
    """Validate a configuration against every invariant.

    Args:
        config: The raw configuration.

    Returns:
        The same configuration, typed as validated.

    Raises:
        InvalidConfig: Listing each violated field and bound.
    """
    errors = _config_violations(config)
    if errors:
        raise InvalidConfig(errors)
    return ValidatedConfig(config)
