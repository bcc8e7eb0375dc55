"""Domain event base class module.

This module defines the base DomainEvent class that all simulation events
inherit from. Events are stamped with the simulated round rather than wall
clock time so that replaying a seed reproduces the same event stream.
"""

from abc import ABC
from dataclasses import dataclass

BASE_STATION_ID = -1
HARVESTER_ID = -2


@dataclass(frozen=True)
class DomainEvent(ABC):
    """Base class for all domain events.

    Represents something that happened during a round that other parts of the
    simulator (logging, dumps, phase-log recounts) might be interested in.

    Attributes:
        aggregate_id: Id of the aggregate that raised the event. Sensor nodes use
            their node id; the base station and the harvester use the reserved
            negative ids ``BASE_STATION_ID`` and ``HARVESTER_ID``.
        round_index: Zero-based round in which the event occurred.
    """

    aggregate_id: int
    round_index: int
