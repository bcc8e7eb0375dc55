"""Composition root of the simulator.

Run with ``python -m src.root <subcommand> ...``.
"""

import logging
import sys
from collections.abc import Sequence

from src.container import container
from src.modules.simulation.controllers.cli_controllers import (
    EXIT_CONFIG,
    SimulationController,
)
from src.settings import Settings


def configure_logging(settings: Settings) -> None:
    """Configure the root logger from the settings' log level.

    Raises:
        ValueError: If the level is not a standard logging level name.
    """
    name = settings.WSNSIM_LOG_LEVEL.strip().upper()
    levels = logging.getLevelNamesMapping()
    if name not in levels:
        raise ValueError(
            f"WSNSIM_LOG_LEVEL must be one of {', '.join(sorted(levels))}, "
            f"got {settings.WSNSIM_LOG_LEVEL!r}"
        )
    logging.basicConfig(
        level=levels[name],
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )


def main(argv: Sequence[str] | None = None) -> int:
    """Run the command line.

    Args:
        argv: Arguments without the program name; ``sys.argv`` when omitted.

    Returns:
        The process exit status.
    """
    try:
        configure_logging(container[Settings])
    except ValueError as error:
        print(f"error: {error}", file=sys.stderr)
        return EXIT_CONFIG
    return SimulationController(container).dispatch(argv)


if __name__ == "__main__":
    raise SystemExit(main())
