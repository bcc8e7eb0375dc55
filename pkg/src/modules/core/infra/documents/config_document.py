"""Scenario file documents using pydantic.

A scenario file is a JSON object whose keys mirror ``SimConfig``. Every key is
optional; only the keys present in the file override the preset or defaults.
Points are written as ``[x, y]``.
"""

from pathlib import Path
from typing import Any, Literal

from pydantic import BaseModel, ConfigDict


class _PartialDocument(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    def overrides(self) -> dict[str, Any]:
        """Fields present in the source document, by name."""
        return self.model_dump(exclude_unset=True)


class RadioDocument(_PartialDocument):
    """Radio constants section of a scenario file."""

    e_elec: float | None = None
    eps_fs: float | None = None
    eps_mp: float | None = None
    e_aggregate: float | None = None
    p_listen: float | None = None
    p_sleep: float | None = None
    e_sample: float | None = None
    death_threshold: float | None = None


class HarvestDocument(_PartialDocument):
    """Harvester section of a scenario file."""

    transfer_efficiency: float | None = None
    d_min: float | None = None
    dwell_time: float | None = None
    harvester_speed: float | None = None
    harvester_capacity: float | None = None
    allow_revival: bool | None = None
    carry_over: bool | None = None
    conserve_emission: bool | None = None


class SimConfigDocument(_PartialDocument):
    """Top level of a scenario file.

    Range checks beyond the basic types are left to ``validate_config`` so a
    file and a flag violating the same bound report the same message.
    """

    area_width: float | None = None
    area_height: float | None = None
    node_count: int | None = None
    ch_probability: float | None = None
    initial_energy: float | None = None
    battery_capacity: float | None = None
    round_duration: float | None = None
    total_rounds: int | None = None
    packet_bits: int | None = None
    radio: RadioDocument | None = None
    harvest: HarvestDocument | None = None
    bs_position: tuple[float, float] | None = None
    depot_position: tuple[float, float] | None = None
    rng_seed: int | None = None
    harvester_enabled: bool | None = None
    bit_rate: float | None = None
    data_phase_fraction: float | None = None
    frames_per_round: int | None = None
    fixed_ch_count: bool | None = None
    tour_solver: Literal["heuristic", "exact"] | None = None

    @classmethod
    def from_file(cls, path: Path) -> "SimConfigDocument":
        """Parse a scenario file.

        Args:
            path: JSON file to read.

        Returns:
            The parsed document.

        Raises:
            OSError: If the file cannot be read.
            pydantic.ValidationError: If a key is unknown or a value has the wrong type.
        """
        return cls.model_validate_json(path.read_text(encoding="utf-8"))
