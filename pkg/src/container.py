"""Dependency injection container setup."""

from lagom import Container

from src.modules.simulation.config.event_config import create_configured_event_dispatcher
from src.modules.simulation.repository.metrics_repository import (
    AbstractMetricsRepository,
    CsvMetricsRepository,
)
from src.modules.simulation.use_case.compare_scenarios_use_case import (
    CompareScenariosUseCase,
)
from src.modules.simulation.use_case.dump_topology_use_case import DumpTopologyUseCase
from src.modules.simulation.use_case.run_simulation_use_case import RunSimulationUseCase
from src.modules.simulation.use_case.sweep_seeds_use_case import SweepSeedsUseCase
from src.settings import CONFIG, Settings

container = Container()

container[Settings] = CONFIG

# Register repository implementation
container[AbstractMetricsRepository] = CsvMetricsRepository()

# Register use cases; each run gets a freshly configured event dispatcher
container[RunSimulationUseCase] = lambda c: RunSimulationUseCase(
    metrics_repository=c[AbstractMetricsRepository],
    dispatcher_factory=create_configured_event_dispatcher,
)
container[CompareScenariosUseCase] = lambda c: CompareScenariosUseCase(
    metrics_repository=c[AbstractMetricsRepository],
    dispatcher_factory=create_configured_event_dispatcher,
)
container[SweepSeedsUseCase] = lambda c: SweepSeedsUseCase(
    metrics_repository=c[AbstractMetricsRepository],
    dispatcher_factory=create_configured_event_dispatcher,
)
container[DumpTopologyUseCase] = lambda c: DumpTopologyUseCase(
    metrics_repository=c[AbstractMetricsRepository],
)
