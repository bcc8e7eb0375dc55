"""Unit tests for the event dispatcher."""

from dataclasses import dataclass

from src.modules.core.domain.domain_event import DomainEvent
from src.modules.core.domain.entity import Entity
from src.modules.core.domain.event_dispatcher import EventDispatcher


@dataclass(frozen=True)
class Pinged(DomainEvent):
    """Test event."""

    pass


@dataclass(frozen=True)
class Ponged(DomainEvent):
    """Another test event."""

    pass


class RecordingHandler:
    """Handler that keeps every event it receives."""

    def __init__(self) -> None:
        """Start with no events."""
        self.events: list[DomainEvent] = []

    def handle(self, event: DomainEvent) -> None:
        """Record the event."""
        self.events.append(event)


class TestEventDispatcher:
    """Unit tests for EventDispatcher."""

    def test_dispatches_by_event_type(self):
        """Test that handlers only receive events of their type."""
        dispatcher = EventDispatcher()
        pings, pongs = RecordingHandler(), RecordingHandler()
        dispatcher.subscribe(Pinged, pings)
        dispatcher.subscribe(Ponged, pongs)

        dispatcher.dispatch([Pinged(1, 0), Ponged(2, 0), Pinged(3, 1)])

        assert [event.aggregate_id for event in pings.events] == [1, 3]
        assert [event.aggregate_id for event in pongs.events] == [2]

    def test_catch_all_handler_receives_everything_in_order(self):
        """Test that a DomainEvent subscriber sees every event."""
        dispatcher = EventDispatcher()
        everything = RecordingHandler()
        dispatcher.subscribe(DomainEvent, everything)

        dispatcher.dispatch([Pinged(1, 0), Ponged(2, 0)])

        assert everything.events == [Pinged(1, 0), Ponged(2, 0)]

    def test_dispatch_single(self):
        """Test dispatching one event."""
        dispatcher = EventDispatcher()
        handler = RecordingHandler()
        dispatcher.subscribe(Pinged, handler)

        dispatcher.dispatch_single(Pinged(7, 3))

        assert handler.events == [Pinged(7, 3)]

    def test_handler_count_and_clear(self):
        """Test handler bookkeeping."""
        dispatcher = EventDispatcher()
        dispatcher.subscribe(Pinged, RecordingHandler())
        dispatcher.subscribe(Pinged, RecordingHandler())

        assert dispatcher.get_handler_count(Pinged) == 2
        assert dispatcher.get_handler_count(Ponged) == 0

        dispatcher.clear_handlers()
        assert dispatcher.get_handler_count(Pinged) == 0


class TestEntity:
    """Unit tests for the Entity base class."""

    def test_pull_domain_events_empties_the_collection(self):
        """Test that pulled events are not returned twice."""
        entity = Entity(id=1)
        entity.add_domain_event(Pinged(1, 0))

        assert entity.pull_domain_events() == [Pinged(1, 0)]
        assert entity.domain_events == []

    def test_equality_and_hash_follow_identity(self):
        """Test that entities compare by id."""
        assert Entity(id=4) == Entity(id=4)
        assert Entity(id=4) != Entity(id=5)
        assert len({Entity(id=4), Entity(id=4)}) == 1
