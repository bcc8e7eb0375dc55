"""Event configuration module.

This module wires the simulation's event handlers to the dispatcher that
receives each round's events.
"""

from src.modules.core.domain.domain_event import DomainEvent
from src.modules.core.domain.event_dispatcher import EventDispatcher
from src.modules.simulation.handlers.simulation_handlers import RoundLogHandler


class EventConfiguration:
    """Centralized event configuration.

    This class provides a structured way to configure all
    event handlers and their subscriptions.
    """

    @staticmethod
    def configure_dispatcher(dispatcher: EventDispatcher) -> None:
        """Configure the event dispatcher with all handlers.

        Args:
            dispatcher: The event dispatcher to configure.
        """
        EventConfiguration._configure_logging(dispatcher)

    @staticmethod
    def _configure_logging(dispatcher: EventDispatcher) -> None:
        """Send every event to the run log.

        Args:
            dispatcher: The event dispatcher to configure.
        """
        dispatcher.subscribe(DomainEvent, RoundLogHandler())


def create_configured_event_dispatcher() -> EventDispatcher:
    """Create and configure an event dispatcher.

    Factory function that creates an EventDispatcher instance
    and configures it with all necessary handlers. Every run gets its own
    dispatcher so per-run handlers never leak into the next run.

    Returns:
        A fully configured EventDispatcher instance.
    """
    dispatcher = EventDispatcher()
    EventConfiguration.configure_dispatcher(dispatcher)
    return dispatcher
