"""Metrics repository: CSV time series, plot scripts and dumps.

Every file is UTF-8, comma separated with LF line endings. Floats are written
with 9 significant digits through ``format`` so the output never depends on
the locale.
"""

import csv
import logging
from abc import ABC, abstractmethod
from collections.abc import Sequence
from dataclasses import dataclass
from pathlib import Path
from typing import override

from src.modules.network.domain.topology import Deployment
from src.modules.simulation.domain.metrics import RoundMetrics

logger = logging.getLogger(__name__)

METRICS_COLUMNS = (
    "round",
    "time_s",
    "alive",
    "consumed_j",
    "emitted_j",
    "delivered_j",
    "data_bits",
    "ch_count",
    "tour_m",
    "clusters_visited",
)
COMPARE_COLUMNS = (
    "round",
    "time_s",
    "alive_on",
    "alive_off",
    "consumed_on",
    "consumed_off",
    "delivered_on",
    "data_on",
    "data_off",
)
AGGREGATE_COLUMNS = (
    "seed",
    "final_alive",
    "lifetime",
    "consumed_j",
    "emitted_j",
    "delivered_j",
    "data_bits",
)


def fmt(value: float) -> str:
    """Format a float with 9 significant digits."""
    return format(value, ".9g")


def _write_rows(path: Path, header: Sequence[str], rows: Sequence[Sequence[str]]) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)


def write_csv(series: Sequence[RoundMetrics], path: Path) -> None:
    """Write the metrics time series, one row per round.

    Args:
        series: Metrics rows; may be empty.
        path: Destination file; parent directories are created.

    Raises:
        OSError: If the file cannot be written.
    """
    _write_rows(
        path,
        METRICS_COLUMNS,
        [
            (
                str(row.round_index),
                fmt(row.sim_time),
                str(row.alive_count),
                fmt(row.consumed_cumulative),
                fmt(row.emitted_cumulative),
                fmt(row.delivered_cumulative),
                str(row.data_received_cumulative),
                str(row.ch_count),
                fmt(row.tour_length),
                str(row.clusters_visited),
            )
            for row in series
        ],
    )
    logger.debug("Wrote %d rows to %s", len(series), path)


def read_csv(path: Path) -> list[RoundMetrics]:
    """Parse a metrics file written by ``write_csv``.

    Raises:
        OSError: If the file cannot be read.
        ValueError: If the header or a value is malformed.
    """
    with path.open(encoding="utf-8", newline="") as handle:
        reader = csv.DictReader(handle)
        if tuple(reader.fieldnames or ()) != METRICS_COLUMNS:
            raise ValueError(f"{path} is not a metrics file: header {reader.fieldnames}")
        return [
            RoundMetrics(
                round_index=int(record["round"]),
                sim_time=float(record["time_s"]),
                alive_count=int(record["alive"]),
                consumed_cumulative=float(record["consumed_j"]),
                emitted_cumulative=float(record["emitted_j"]),
                delivered_cumulative=float(record["delivered_j"]),
                data_received_cumulative=int(record["data_bits"]),
                ch_count=int(record["ch_count"]),
                tour_length=float(record["tour_m"]),
                clusters_visited=int(record["clusters_visited"]),
            )
            for record in reader
        ]


@dataclass(frozen=True)
class PlotFamily:
    """One figure family: what it plots and how it is labelled."""

    name: str
    title: str
    ylabel: str
    columns: tuple[tuple[int, str], ...]


PLOT_FAMILIES = (
    PlotFamily(
        "alive",
        "Time Vs. No of Alive Nodes (Node in the network={n})",
        "No of Alive Nodes",
        ((3, "alive"),),
    ),
    PlotFamily(
        "consumed",
        "Time Vs. Total Consumed Energy ({n} Nodes)",
        "Total Consumed Energy (J)",
        ((4, "consumed"),),
    ),
    PlotFamily(
        "harvested",
        "Time Vs. Total Harvested Energy ({n} Nodes)",
        "Total Harvested Energy (J)",
        ((5, "emitted"), (6, "delivered")),
    ),
    PlotFamily(
        "data",
        "Time Vs. Total Data Received ({n} Nodes)",
        "Total Data Received (bits)",
        ((7, "data"),),
    ),
)


def _plot_script(family: PlotFamily, csv_path: Path, node_count: int) -> str:
    curves = ", ".join(
        f'"{csv_path.name}" using 2:{column} skip 1 with lines title "{label}"'
        for column, label in family.columns
    )
    return "\n".join(
        [
            'set datafile separator ","',
            "set terminal pngcairo size 800,600",
            f'set output "{family.name}_{node_count}.png"',
            f'set title "{family.title.format(n=node_count)}"',
            'set xlabel "Time (s)"',
            f'set ylabel "{family.ylabel}"',
            "set grid",
            f"plot {curves}",
            "",
        ]
    )


def emit_plots(
    series: Sequence[RoundMetrics], out_dir: Path, csv_path: Path, node_count: int
) -> list[Path]:
    """Write one gnuplot script per figure family next to the metrics file.

    Args:
        series: The run's metrics; must not be empty.
        out_dir: Directory receiving the scripts.
        csv_path: Metrics file the scripts plot, in ``out_dir``.
        node_count: Network size, used in file names and titles.

    Returns:
        The script paths, e.g. ``alive_50.plt``.

    Raises:
        ValueError: If ``series`` is empty.
        OSError: If a script cannot be written.
    """
    if not series:
        raise ValueError("cannot plot an empty series")
    out_dir.mkdir(parents=True, exist_ok=True)
    paths: list[Path] = []
    for family in PLOT_FAMILIES:
        path = out_dir / f"{family.name}_{node_count}.plt"
        path.write_text(_plot_script(family, csv_path, node_count), encoding="utf-8")
        paths.append(path)
    return paths


def lifetime(series: Sequence[RoundMetrics]) -> int | None:
    """First round that ended with no alive node, ``None`` if the network survived."""
    return next((row.round_index for row in series if row.alive_count == 0), None)


def describe_lifetime(series: Sequence[RoundMetrics]) -> str:
    """Lifetime as written in summaries: a round index or ``survived``."""
    value = lifetime(series)
    return "survived" if value is None else str(value)


@dataclass(frozen=True)
class SeedSummary:
    """One row of a sweep's aggregate file."""

    seed: int
    final_alive: int
    lifetime: str
    consumed_j: float
    emitted_j: float
    delivered_j: float
    data_bits: int

    @classmethod
    def of(cls, seed: int, series: Sequence[RoundMetrics], node_count: int) -> "SeedSummary":
        """Summarize a run; an empty run keeps every node alive."""
        last = series[-1] if series else None
        return cls(
            seed=seed,
            final_alive=last.alive_count if last else node_count,
            lifetime=describe_lifetime(series),
            consumed_j=last.consumed_cumulative if last else 0.0,
            emitted_j=last.emitted_cumulative if last else 0.0,
            delivered_j=last.delivered_cumulative if last else 0.0,
            data_bits=last.data_received_cumulative if last else 0,
        )


class AbstractMetricsRepository(ABC):
    """Abstract methods for storing run artifacts."""

    @abstractmethod
    def save_metrics(self, series: Sequence[RoundMetrics], path: Path) -> Path:
        """Store a metrics time series."""
        pass

    @abstractmethod
    def load_metrics(self, path: Path) -> list[RoundMetrics]:
        """Load a stored metrics time series."""
        pass

    @abstractmethod
    def save_plots(
        self,
        series: Sequence[RoundMetrics],
        out_dir: Path,
        metrics_path: Path,
        node_count: int,
    ) -> list[Path]:
        """Store the plot scripts of a run."""
        pass

    @abstractmethod
    def save_comparison(
        self, on: Sequence[RoundMetrics], off: Sequence[RoundMetrics], path: Path
    ) -> Path:
        """Store a harvesting-versus-baseline comparison."""
        pass

    @abstractmethod
    def save_aggregate(self, summaries: Sequence[SeedSummary], path: Path) -> Path:
        """Store the per-seed summaries of a sweep."""
        pass

    @abstractmethod
    def save_topology(self, deployment: Deployment, path: Path) -> Path:
        """Store node positions."""
        pass

    @abstractmethod
    def save_clusters(
        self, rows: Sequence[tuple[int, int, int | None]], path: Path
    ) -> Path:
        """Store per-round cluster membership."""
        pass


class CsvMetricsRepository(AbstractMetricsRepository):
    """File-system implementation of the metrics repository."""

    @override
    def save_metrics(self, series: Sequence[RoundMetrics], path: Path) -> Path:
        """Write the time series to ``path``.

        Args:
            series: Metrics rows.
            path: Destination, e.g. ``out/metrics_n50_s42.csv``.

        Returns:
            The written path.
        """
        write_csv(series, path)
        return path

    @override
    def load_metrics(self, path: Path) -> list[RoundMetrics]:
        """Read a time series written by ``save_metrics``."""
        return read_csv(path)

    @override
    def save_plots(
        self,
        series: Sequence[RoundMetrics],
        out_dir: Path,
        metrics_path: Path,
        node_count: int,
    ) -> list[Path]:
        """Write the four plot scripts into ``out_dir``."""
        return emit_plots(series, out_dir, metrics_path, node_count)

    @override
    def save_comparison(
        self, on: Sequence[RoundMetrics], off: Sequence[RoundMetrics], path: Path
    ) -> Path:
        """Write both runs side by side, one row per round.

        Raises:
            ValueError: If the runs have different lengths.
        """
        if len(on) != len(off):
            raise ValueError(f"runs differ in length: {len(on)} vs {len(off)}")
        _write_rows(
            path,
            COMPARE_COLUMNS,
            [
                (
                    str(a.round_index),
                    fmt(a.sim_time),
                    str(a.alive_count),
                    str(b.alive_count),
                    fmt(a.consumed_cumulative),
                    fmt(b.consumed_cumulative),
                    fmt(a.delivered_cumulative),
                    str(a.data_received_cumulative),
                    str(b.data_received_cumulative),
                )
                for a, b in zip(on, off, strict=True)
            ],
        )
        return path

    @override
    def save_aggregate(self, summaries: Sequence[SeedSummary], path: Path) -> Path:
        """Write one row per seed."""
        _write_rows(
            path,
            AGGREGATE_COLUMNS,
            [
                (
                    str(summary.seed),
                    str(summary.final_alive),
                    summary.lifetime,
                    fmt(summary.consumed_j),
                    fmt(summary.emitted_j),
                    fmt(summary.delivered_j),
                    str(summary.data_bits),
                )
                for summary in summaries
            ],
        )
        return path

    @override
    def save_topology(self, deployment: Deployment, path: Path) -> Path:
        """Write ``id,x,y`` per node."""
        _write_rows(
            path,
            ("id", "x", "y"),
            [
                (str(node.id), fmt(node.position.x), fmt(node.position.y))
                for node in deployment.nodes
            ],
        )
        return path

    @override
    def save_clusters(
        self, rows: Sequence[tuple[int, int, int | None]], path: Path
    ) -> Path:
        """Write ``round,head_id,member_id``; a head alone has an empty member."""
        _write_rows(
            path,
            ("round", "head_id", "member_id"),
            [
                (str(round_index), str(head), "" if member is None else str(member))
                for round_index, head, member in rows
            ],
        )
        return path
