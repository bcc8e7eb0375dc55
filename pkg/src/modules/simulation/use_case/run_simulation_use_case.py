"""Use case for running one scenario and storing its artifacts."""

import logging
from collections.abc import Callable
from dataclasses import dataclass
from pathlib import Path

from src.modules.core.domain.event_dispatcher import EventDispatcher
from src.modules.network.domain.config import SimConfig, validate_config
from src.modules.network.domain.events import ClustersFormed
from src.modules.network.domain.topology import deploy
from src.modules.simulation.domain.engine import run
from src.modules.simulation.domain.metrics import RoundMetrics
from src.modules.simulation.handlers.simulation_handlers import ClusterDumpHandler
from src.modules.simulation.repository.metrics_repository import (
    AbstractMetricsRepository,
)

logger = logging.getLogger(__name__)


def metrics_file_name(scenario: str, seed: int) -> str:
    """File name of a run's metrics, e.g. ``metrics_n50_s42.csv``."""
    return f"metrics_{scenario}_s{seed}.csv"


@dataclass
class RunSimulationCommand:
    """Command to run one scenario."""

    config: SimConfig
    scenario: str
    out_dir: Path
    dump_topology: Path | None = None
    dump_clusters: Path | None = None


@dataclass(frozen=True)
class RunSimulationResult:
    """Artifacts of a finished run."""

    series: list[RoundMetrics]
    metrics_path: Path
    plot_paths: list[Path]


@dataclass(frozen=True)
class RunSimulationUseCase:
    """Use case for running one scenario."""

    metrics_repository: AbstractMetricsRepository
    dispatcher_factory: Callable[[], EventDispatcher]

    def execute(self, command: RunSimulationCommand) -> RunSimulationResult:
        """Execute the use case to run a scenario.

        Args:
            command: Scenario, output directory and optional dumps.

        Returns:
            The metrics and the paths written.

        Raises:
            InvalidConfig: If the configuration is invalid.
            OSError: If an artifact cannot be written.
        """
        config = validate_config(command.config)
        dispatcher = self.dispatcher_factory()
        clusters = ClusterDumpHandler()
        if command.dump_clusters is not None:
            dispatcher.subscribe(ClustersFormed, clusters)

        series = run(config, dispatcher)

        metrics_path = self.metrics_repository.save_metrics(
            series, command.out_dir / metrics_file_name(command.scenario, config.rng_seed)
        )
        plot_paths: list[Path] = []
        if series:
            plot_paths = self.metrics_repository.save_plots(
                series, command.out_dir, metrics_path, config.node_count
            )
        else:
            logger.warning("No round was played, skipping plot scripts")
        if command.dump_topology is not None:
            self.metrics_repository.save_topology(deploy(config), command.dump_topology)
        if command.dump_clusters is not None:
            self.metrics_repository.save_clusters(clusters.rows, command.dump_clusters)
        logger.info("Wrote %s", metrics_path)
        return RunSimulationResult(
            series=series, metrics_path=metrics_path, plot_paths=plot_paths
        )
