"""Simulation command-line controllers.

Subcommands:
    run            run one scenario, write its metrics CSV and plot scripts
    compare        run with and without the harvester, write both side by side
    sweep          run one scenario per seed and aggregate the results
    dump-topology  write the node placement of a scenario

Every subcommand takes exactly one of ``--preset`` or ``--config``. Flags win
over the config file, which wins over the preset.
"""

import argparse
import logging
import sys
from collections.abc import Sequence
from pathlib import Path
from typing import Any, final

from lagom import Container
from pydantic import ValidationError

from src.modules.core.infra.documents.config_document import SimConfigDocument
from src.modules.network.domain.config import TOUR_SOLVERS, InvalidConfig, SimConfig
from src.modules.simulation.config.scenario_config import (
    PRESETS,
    UnknownPreset,
    build_config,
)
from src.modules.simulation.use_case.compare_scenarios_use_case import (
    CompareScenariosCommand,
    CompareScenariosUseCase,
)
from src.modules.simulation.use_case.dump_topology_use_case import (
    DumpTopologyCommand,
    DumpTopologyUseCase,
)
from src.modules.simulation.use_case.run_simulation_use_case import (
    RunSimulationCommand,
    RunSimulationUseCase,
)
from src.modules.simulation.use_case.sweep_seeds_use_case import (
    SweepSeedsCommand,
    SweepSeedsUseCase,
    parse_seeds,
)
from src.settings import Settings

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_IO = 1
EXIT_CONFIG = 2


def _scenario_arguments(parser: argparse.ArgumentParser, out_default: str) -> None:
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument(
        "--preset", help=f"scenario preset ({', '.join(sorted(PRESETS))})"
    )
    source.add_argument("--config", type=Path, help="JSON scenario file")
    parser.add_argument("--seed", type=int, help="PRNG seed")
    parser.add_argument("--rounds", type=int, help="number of rounds to simulate")
    parser.add_argument(
        "--no-harvester",
        dest="harvester_enabled",
        action="store_const",
        const=False,
        help="disable the mobile harvester",
    )
    parser.add_argument(
        "--tour-solver", choices=TOUR_SOLVERS, help="harvester tour solver"
    )
    parser.add_argument(
        "--fixed-ch-count",
        action="store_const",
        const=True,
        help="elect exactly ceil(p * node_count) heads per round",
    )
    parser.add_argument(
        "-o",
        "--out-dir",
        type=Path,
        default=Path(out_default),
        help="output directory (default: $WSNSIM_OUT or %(default)s)",
    )


def build_parser(settings: Settings) -> argparse.ArgumentParser:
    """Build the argument parser.

    Args:
        settings: Runtime settings supplying the default output directory.

    Returns:
        The parser with its four subcommands.
    """
    parser = argparse.ArgumentParser(
        prog="wsnsim",
        description="LEACH sensor network simulator with a mobile RF harvester.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    run = commands.add_parser("run", help="run one scenario")
    _scenario_arguments(run, settings.WSNSIM_OUT)
    run.add_argument("--dump-topology", type=Path, help="also write id,x,y to this file")
    run.add_argument(
        "--dump-clusters", type=Path, help="also write round,head_id,member_id to this file"
    )

    compare = commands.add_parser("compare", help="harvesting run against its baseline")
    _scenario_arguments(compare, settings.WSNSIM_OUT)

    sweep = commands.add_parser("sweep", help="run one scenario for several seeds")
    _scenario_arguments(sweep, settings.WSNSIM_OUT)
    sweep.add_argument(
        "--seeds", required=True, help="seed range 1..5 or list 1,2,7"
    )
    sweep.add_argument("--workers", type=int, default=1, help="parallel processes")

    dump = commands.add_parser("dump-topology", help="write node positions only")
    _scenario_arguments(dump, settings.WSNSIM_OUT)
    dump.add_argument(
        "path", type=Path, nargs="?", help="output file (default: in the output directory)"
    )
    return parser


def _flag_overrides(args: argparse.Namespace) -> dict[str, Any]:
    return {
        "rng_seed": args.seed,
        "total_rounds": args.rounds,
        "harvester_enabled": args.harvester_enabled,
        "tour_solver": args.tour_solver,
        "fixed_ch_count": args.fixed_ch_count,
    }


def _scenario(args: argparse.Namespace) -> tuple[SimConfig, str]:
    document = None
    name = args.preset
    if args.config is not None:
        document = SimConfigDocument.from_file(args.config)
        name = args.config.stem
    return build_config(args.preset, document, _flag_overrides(args)), name


@final
class SimulationController:
    """Controller for the simulator's subcommands.

    Each handler turns parsed arguments into a use-case command, executes it
    and prints the result. Errors are reported by ``dispatch``.
    """

    def __init__(self, container: Container) -> None:
        """Initialize the controller.

        Args:
            container: Dependency container resolving the use cases.
        """
        self.container: Container = container

    def run(self, args: argparse.Namespace) -> int:
        """Run one scenario."""
        config, name = _scenario(args)
        result = self.container[RunSimulationUseCase].execute(
            RunSimulationCommand(
                config=config,
                scenario=name,
                out_dir=args.out_dir,
                dump_topology=args.dump_topology,
                dump_clusters=args.dump_clusters,
            )
        )
        print(result.metrics_path)
        return EXIT_OK

    def compare(self, args: argparse.Namespace) -> int:
        """Compare the scenario with and without the harvester."""
        config, name = _scenario(args)
        result = self.container[CompareScenariosUseCase].execute(
            CompareScenariosCommand(config=config, scenario=name, out_dir=args.out_dir)
        )
        print(result.summary)
        return EXIT_OK

    def sweep(self, args: argparse.Namespace) -> int:
        """Run the scenario once per seed."""
        config, name = _scenario(args)
        result = self.container[SweepSeedsUseCase].execute(
            SweepSeedsCommand(
                config=config,
                scenario=name,
                out_dir=args.out_dir,
                seeds=parse_seeds(args.seeds),
                workers=args.workers,
            )
        )
        print(result.aggregate_path)
        return EXIT_OK

    def dump_topology(self, args: argparse.Namespace) -> int:
        """Write the scenario's node positions."""
        config, name = _scenario(args)
        path = args.path or args.out_dir / f"topology_{name}_s{config.rng_seed}.csv"
        self.container[DumpTopologyUseCase].execute(
            DumpTopologyCommand(config=config, path=path)
        )
        print(path)
        return EXIT_OK

    def dispatch(self, argv: Sequence[str] | None = None) -> int:
        """Parse ``argv`` and run the chosen subcommand.

        Args:
            argv: Arguments without the program name; ``sys.argv`` when omitted.

        Returns:
            0 on success, 2 for configuration errors, 1 for I/O errors.
        """
        args = build_parser(self.container[Settings]).parse_args(argv)
        logger.debug("Command %s with %s", args.command, vars(args))
        handlers = {
            "run": self.run,
            "compare": self.compare,
            "sweep": self.sweep,
            "dump-topology": self.dump_topology,
        }
        try:
            return handlers[args.command](args)
        except InvalidConfig as error:
            print(f"error: {error}", file=sys.stderr)
            return EXIT_CONFIG
        except ValidationError as error:
            print(f"error: invalid scenario file: {error}", file=sys.stderr)
            return EXIT_CONFIG
        except (UnknownPreset, ValueError) as error:
            print(f"error: {error}", file=sys.stderr)
            return EXIT_CONFIG
        except OSError as error:
            print(f"error: {error}", file=sys.stderr)
            return EXIT_IO
