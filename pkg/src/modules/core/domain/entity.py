"""Domain entity base class with identity and domain event support."""

from dataclasses import dataclass, field
from typing import override

from .domain_event import DomainEvent


@dataclass(eq=False)
class Entity:
    """Base class for domain entities with identity and domain event support.

    Entities are distinguished by their identity rather than their attributes.
    Two entities with the same id are considered equal, even if their energy or
    role differ.

    Attributes:
        id: Identifier of the entity, assigned by the creator.
        _domain_events: Internal list of domain events to be dispatched.

    Example:
        ```python
        node = NodeState(id=3, position=Point(10.0, 20.0), energy=2.0)
        node.add_domain_event(NodeDied(aggregate_id=node.id, round_index=7, phase="member"))
        ```
    """

    id: int
    _domain_events: list[DomainEvent] = field(
        default_factory=list, init=False, repr=False
    )

    def add_domain_event(self, event: DomainEvent) -> None:
        """Add a domain event to be dispatched later.

        Args:
            event: The domain event to add to the collection.
        """
        self._domain_events.append(event)

    def clear_domain_events(self) -> None:
        """Clear all domain events.

        Called once the events have been moved to the round's event log so they
        are never dispatched twice; see ``pull_domain_events``.
        """
        self._domain_events.clear()

    def pull_domain_events(self) -> list[DomainEvent]:
        """Return the collected events and clear the collection.

        Returns:
            The events collected since the last pull, in the order they were added.
        """
        events = self.domain_events
        self.clear_domain_events()
        return events

    @property
    def domain_events(self) -> list[DomainEvent]:
        """Get a copy of all domain events.

        Returns:
            A copy of all domain events currently collected.
        """
        return self._domain_events.copy()

    @override
    def __eq__(self, other: object) -> bool:
        """Check equality based on entity identity.

        Args:
            other: Object to compare with.

        Returns:
            True if both entities have the same type and id.
        """
        if not isinstance(other, type(self)):
            return NotImplemented
        return self.id == other.id

    @override
    def __hash__(self) -> int:
        """Generate hash based on entity identity.

        Returns:
            Hash value based on the entity's type and id.
        """
        return hash((type(self).__name__, self.id))
