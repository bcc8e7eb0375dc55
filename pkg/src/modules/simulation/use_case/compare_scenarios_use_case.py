"""Use case for comparing a harvesting run with its baseline."""

from collections.abc import Callable
from dataclasses import dataclass, replace
from pathlib import Path

from src.modules.core.domain.event_dispatcher import EventDispatcher
from src.modules.network.domain.config import SimConfig, validate_config
from src.modules.simulation.domain.engine import run
from src.modules.simulation.domain.metrics import RoundMetrics
from src.modules.simulation.repository.metrics_repository import (
    AbstractMetricsRepository,
    describe_lifetime,
)


@dataclass
class CompareScenariosCommand:
    """Command to run a scenario with and without the harvester."""

    config: SimConfig
    scenario: str
    out_dir: Path


@dataclass(frozen=True)
class CompareScenariosResult:
    """Both time series, the comparison file and its summary line."""

    harvesting: list[RoundMetrics]
    baseline: list[RoundMetrics]
    path: Path
    summary: str


def final_alive(series: list[RoundMetrics], node_count: int) -> int:
    """Alive nodes after the last round; the whole network if nothing ran."""
    return series[-1].alive_count if series else node_count


@dataclass(frozen=True)
class CompareScenariosUseCase:
    """Use case for the harvesting-versus-baseline comparison."""

    metrics_repository: AbstractMetricsRepository
    dispatcher_factory: Callable[[], EventDispatcher]

    def execute(self, command: CompareScenariosCommand) -> CompareScenariosResult:
        """Run the scenario twice with the same seed and write both side by side.

        Args:
            command: Scenario and output directory.

        Returns:
            Both runs and the summary ``final_alive=<on>/<off> lifetime=<on>/<off>``.

        Raises:
            InvalidConfig: If the configuration is invalid.
            OSError: If the comparison file cannot be written.
        """
        on = validate_config(replace(command.config, harvester_enabled=True))
        off = validate_config(replace(command.config, harvester_enabled=False))
        harvesting = run(on, self.dispatcher_factory())
        baseline = run(off, self.dispatcher_factory())

        path = self.metrics_repository.save_comparison(
            harvesting,
            baseline,
            command.out_dir / f"compare_{command.scenario}_s{on.rng_seed}.csv",
        )
        summary = (
            f"final_alive={final_alive(harvesting, on.node_count)}"
            f"/{final_alive(baseline, off.node_count)}"
            f" lifetime={describe_lifetime(harvesting)}/{describe_lifetime(baseline)}"
        )
        return CompareScenariosResult(
            harvesting=harvesting, baseline=baseline, path=path, summary=summary
        )
