"""Node deployment and seeded random streams.

Every random draw of a run comes from a stream derived here, so adding a new
consumer never perturbs the draws of another subsystem. Streams use numpy's
PCG64 bit generator seeded from a ``SeedSequence`` whose spawn key is a
digest of the subsystem label.
"""

import hashlib
from dataclasses import dataclass

import numpy as np

from src.modules.core.domain.geometry import Point
from src.modules.network.domain.config import ValidatedConfig
from src.modules.network.domain.node import NodeState

DEPLOY_STREAM = "deploy"
ELECT_STREAM = "elect"


def _label_key(label: str) -> int:
    digest = hashlib.sha256(label.encode("utf-8")).digest()
    return int.from_bytes(digest[:8], "little")


def split_stream(seed: int, label: str) -> np.random.Generator:
    """Derive an independent, reproducible random stream for one subsystem.

    Args:
        seed: The run's 64-bit seed.
        label: Name of the consuming subsystem, e.g. ``"deploy"`` or ``"elect"``.

    Returns:
        A PCG64-backed generator; equal ``(seed, label)`` pairs yield equal streams.
    """
    sequence = np.random.SeedSequence(entropy=seed, spawn_key=(_label_key(label),))
    return np.random.Generator(np.random.PCG64(sequence))


@dataclass(frozen=True)
class Deployment:
    """Node placement for a whole run.

    Attributes:
        nodes: Initial node states, ids ``0..node_count-1``.
        bs_position: Base-station position.
        depot_position: Harvester depot position.
    """

    nodes: tuple[NodeState, ...]
    bs_position: Point
    depot_position: Point

    @property
    def positions(self) -> tuple[Point, ...]:
        """Node positions in id order."""
        return tuple(node.position for node in self.nodes)

    def fresh_nodes(self) -> list[NodeState]:
        """Independent mutable copies of the initial node states."""
        return [node.copy() for node in self.nodes]


def deploy(config: ValidatedConfig) -> Deployment:
    """Scatter nodes i.i.d. uniformly over the deployment rectangle.

    Args:
        config: Validated scenario configuration.

    Returns:
        The deployment with every node at ``initial_energy`` and no role.
    """
    rng = split_stream(config.rng_seed, DEPLOY_STREAM)
    xs = rng.uniform(0.0, config.area_width, size=config.node_count)
    ys = rng.uniform(0.0, config.area_height, size=config.node_count)
    nodes = tuple(
        NodeState(
            id=index,
            position=Point(float(x), float(y)),
            energy=config.initial_energy,
            death_threshold=config.radio.death_threshold,
        )
        for index, (x, y) in enumerate(zip(xs, ys, strict=True))
    )
    return Deployment(
        nodes=nodes, bs_position=config.base_station, depot_position=config.depot
    )
