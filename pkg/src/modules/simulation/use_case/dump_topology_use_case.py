"""Use case for writing a scenario's node placement."""

from dataclasses import dataclass
from pathlib import Path

from src.modules.network.domain.config import SimConfig, validate_config
from src.modules.network.domain.topology import Deployment, deploy
from src.modules.simulation.repository.metrics_repository import (
    AbstractMetricsRepository,
)


@dataclass
class DumpTopologyCommand:
    """Command to write the deployment of a scenario."""

    config: SimConfig
    path: Path


@dataclass(frozen=True)
class DumpTopologyUseCase:
    """Use case for dumping node positions without running the scenario."""

    metrics_repository: AbstractMetricsRepository

    def execute(self, command: DumpTopologyCommand) -> Deployment:
        """Deploy the scenario's nodes and write ``id,x,y``.

        Raises:
            InvalidConfig: If the configuration is invalid.
            OSError: If the file cannot be written.
        """
        deployment = deploy(validate_config(command.config))
        self.metrics_repository.save_topology(deployment, command.path)
        return deployment
