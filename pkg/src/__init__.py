"""WSN Recharge Sim - LEACH sensor network with a mobile RF harvester.

This package simulates a clustered wireless sensor network, round by round,
while a mobile harvester refills the cluster heads' neighbourhoods with the
energy the network consumed in the previous round.

Architecture Overview:
    The application follows the same modular layout for every bounded context:

    - **Core**: Entity and DomainEvent base classes, the EventDispatcher, planar
      geometry and the pydantic scenario-file documents
    - **Network**: configuration, deployment, LEACH election, clusters and the
      radio energy model
    - **Harvester**: budget, per-cluster allocation, tour planning and the
      inverse-square recharge
    - **Simulation**: the round loop, metrics, artifacts and the command line

Module Structure:
    ```
    src/
    ├── container.py          # Dependency injection setup
    ├── root.py               # Composition root, `python -m src.root`
    ├── settings.py           # Environment settings
    └── modules/
        ├── core/             # Shared kernel
        │   ├── domain/       # Entity, events, dispatcher, geometry
        │   └── infra/        # Scenario file documents
        ├── network/domain/   # Nodes, topology, clustering, radio
        ├── harvester/domain/ # Harvester entity and tours
        └── simulation/
            ├── domain/       # Engine, metrics, events
            ├── repository/   # CSV, plot scripts, dumps
            ├── use_case/     # run, compare, sweep, dump-topology
            ├── handlers/     # Event handlers
            ├── controllers/  # Command-line controller
            └── config/       # Presets and event wiring
    ```

Examples:
    Running the 50-node scenario from Python:
    ```python
    from src.modules.network.domain.config import SimConfig
    from src.modules.simulation.domain.engine import run

    series = run(SimConfig(node_count=50, rng_seed=42))
    print(series[-1].alive_count)
    ```

    From the shell:
    ```
    task sim run --preset n50 --seed 42 -o out/
    task sim compare --preset n50
    task sim sweep --preset n100 --seeds 1..5 --workers 4
    ```

Testing:
    Run the test suite with: `task test`
"""
