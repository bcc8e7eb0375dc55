"""Use case for sweeping a scenario over several seeds."""

import logging
from collections.abc import Callable, Sequence
from dataclasses import dataclass, replace
from multiprocessing import Pool
from pathlib import Path

from src.modules.core.domain.event_dispatcher import EventDispatcher
from src.modules.network.domain.config import SimConfig, ValidatedConfig, validate_config
from src.modules.simulation.domain.engine import run
from src.modules.simulation.domain.metrics import RoundMetrics
from src.modules.simulation.repository.metrics_repository import (
    AbstractMetricsRepository,
    SeedSummary,
)
from src.modules.simulation.use_case.run_simulation_use_case import metrics_file_name

logger = logging.getLogger(__name__)


def parse_seeds(text: str) -> list[int]:
    """Parse ``1..5`` (inclusive range) or ``1,2,7``.

    Raises:
        ValueError: If the text is empty or malformed.
    """
    text = text.strip()
    if not text:
        raise ValueError("empty seed list")
    if ".." in text:
        first, _, last = text.partition("..")
        start, stop = int(first), int(last)
        if stop < start:
            raise ValueError(f"empty seed range {text!r}")
        return list(range(start, stop + 1))
    return [int(part) for part in text.split(",") if part.strip()]


def _simulate(config: ValidatedConfig) -> list[RoundMetrics]:
    return run(config)


@dataclass
class SweepSeedsCommand:
    """Command to run a scenario once per seed."""

    config: SimConfig
    scenario: str
    out_dir: Path
    seeds: Sequence[int]
    workers: int = 1


@dataclass(frozen=True)
class SweepSeedsResult:
    """Per-seed summaries and the files written."""

    summaries: list[SeedSummary]
    metrics_paths: list[Path]
    aggregate_path: Path


@dataclass(frozen=True)
class SweepSeedsUseCase:
    """Use case for seed sweeps."""

    metrics_repository: AbstractMetricsRepository
    dispatcher_factory: Callable[[], EventDispatcher]

    def execute(self, command: SweepSeedsCommand) -> SweepSeedsResult:
        """Run every seed, in a process pool when more than one worker is asked for.

        Args:
            command: Scenario, seeds, worker count and output directory.

        Returns:
            The per-seed summaries in seed-list order.

        Raises:
            ValueError: If the seed list is empty or workers < 1.
            InvalidConfig: If a seeded configuration is invalid.
            OSError: If an artifact cannot be written.
        """
        if not command.seeds:
            raise ValueError("at least one seed is required")
        if command.workers < 1:
            raise ValueError(f"workers must be >= 1, got {command.workers}")
        configs = [
            validate_config(replace(command.config, rng_seed=seed)) for seed in command.seeds
        ]

        if command.workers > 1:
            logger.info("Sweeping %d seeds on %d workers", len(configs), command.workers)
            with Pool(command.workers) as pool:
                runs = pool.map(_simulate, configs)
        else:
            runs = [run(config, self.dispatcher_factory()) for config in configs]

        summaries: list[SeedSummary] = []
        metrics_paths: list[Path] = []
        for config, series in zip(configs, runs, strict=True):
            metrics_paths.append(
                self.metrics_repository.save_metrics(
                    series, command.out_dir / metrics_file_name(command.scenario, config.rng_seed)
                )
            )
            summaries.append(SeedSummary.of(config.rng_seed, series, config.node_count))
        aggregate_path = self.metrics_repository.save_aggregate(
            summaries, command.out_dir / f"aggregate_{command.scenario}.csv"
        )
        return SweepSeedsResult(
            summaries=summaries, metrics_paths=metrics_paths, aggregate_path=aggregate_path
        )
