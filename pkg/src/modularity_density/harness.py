"""Compare two partition streams over a series of graph snapshots.

Each snapshot is scored under both partitions; per-snapshot differences
(A minus B) are averaged over the series.

Manifest format (paths relative to the manifest's directory)::

    # comment
    directed false
    weighted true
    label_a LabelRankT
    label_b Estrangement
    snap0.edges snap0.a.part snap0.b.part
    snap1.edges snap1.a.part snap1.b.part
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .errors import InputError
from .graph import Graph, parse_edge_list
from .metrics import report
from .partition import Partition, parse_partition

DIFFERENCE_METRICS = ("q", "qs", "qds", "intra_edges", "contraction", "inter_edges", "expansion", "conductance")
DISPLAY_NAMES = {
    "q": "Q", "qs": "Qs", "qds": "Qds", "intra_edges": "Intra-edges", "contraction": "Contraction",
    "inter_edges": "Inter-edges", "expansion": "Expansion", "conductance": "Conductance",
}
AGGREGATION_NOTE = "per-snapshot aggregation: sum of intra/inter-edges, mean over communities of contraction/expansion/conductance"


@dataclass(frozen=True)
class Snapshot:
    graph: Graph
    partition_a: Partition
    partition_b: Partition


@dataclass(frozen=True)
class SnapshotSeries:
    snapshots: tuple[Snapshot, ...]
    label_a: str = "A"
    label_b: str = "B"

    def __post_init__(self) -> None:
        if not self.snapshots:
            raise InputError("at least one snapshot required")
        for i, s in enumerate(self.snapshots):
            for name, p in (("A", s.partition_a), ("B", s.partition_b)):
                if p.node_count != s.graph.node_count:
                    raise InputError(
                        f"snapshot {i}: partition {name} covers {p.node_count} nodes, graph has {s.graph.node_count}"
                    )

    def swapped(self) -> "SnapshotSeries":
        return SnapshotSeries(
            tuple(Snapshot(s.graph, s.partition_b, s.partition_a) for s in self.snapshots),
            label_a=self.label_b,
            label_b=self.label_a,
        )


@dataclass(frozen=True)
class DifferenceTable:
    means: dict[str, float]
    snapshot_count: int
    label_a: str = "A"
    label_b: str = "B"

    def to_tsv(self, precision: int = 4) -> str:
        lines = [
            f"# mean of ({self.label_a} - {self.label_b}) over {self.snapshot_count} snapshot(s)",
            f"# {AGGREGATION_NOTE}",
            f"metric\t{self.label_a}-{self.label_b}",
        ]
        lines += [f"{DISPLAY_NAMES[k]}\t{self.means[k]:.{precision}f}" for k in DIFFERENCE_METRICS]
        return "\n".join(lines) + "\n"


def _parse_bool(value: str, lineno: int) -> bool:
    v = value.lower()
    if v in ("true", "yes", "1"):
        return True
    if v in ("false", "no", "0"):
        return False
    raise InputError(f"manifest line {lineno}: expected a boolean, got {value!r}")


def load_series(manifest: str, base_dir: str | Path = ".") -> SnapshotSeries:
    """Parse a manifest and every file it references."""
    base = Path(base_dir)
    directed = weighted = False
    labels = {"label_a": "A", "label_b": "B"}
    rows: list[tuple[int, list[str]]] = []
    for lineno, raw in enumerate(manifest.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, _, rest = line.partition(" ")
        rest = rest.strip()
        if key in ("directed", "weighted"):
            if rows:
                raise InputError(f"manifest line {lineno}: header {key!r} must precede snapshot lines")
            if key == "directed":
                directed = _parse_bool(rest, lineno)
            else:
                weighted = _parse_bool(rest, lineno)
        elif key in labels:
            if not rest:
                raise InputError(f"manifest line {lineno}: empty {key}")
            labels[key] = rest
        else:
            tokens = line.split()
            if len(tokens) != 3:
                raise InputError(f"manifest line {lineno}: expected 'graph partitionA partitionB', got {line!r}")
            rows.append((lineno, tokens))
    if not rows:
        raise InputError("at least one snapshot required")

    snapshots = []
    for index, (lineno, (gpath, apath, bpath)) in enumerate(rows):
        current = gpath
        try:
            g = parse_edge_list((base / gpath).read_text(), directed=directed, weighted=weighted)
            current = apath
            pa = parse_partition((base / apath).read_text(), g.node_count)
            current = bpath
            pb = parse_partition((base / bpath).read_text(), g.node_count)
        except (InputError, OSError) as exc:
            raise InputError(f"snapshot {index} (manifest line {lineno}), file {current}: {exc}") from exc
        snapshots.append(Snapshot(g, pa, pb))
    return SnapshotSeries(tuple(snapshots), labels["label_a"], labels["label_b"])


def load_series_file(path: str | Path) -> SnapshotSeries:
    path = Path(path)
    return load_series(path.read_text(), base_dir=path.parent)


def snapshot_differences(series: SnapshotSeries) -> list[dict[str, float]]:
    out = []
    for s in series.snapshots:
        va = report(s.graph, s.partition_a).values()
        vb = report(s.graph, s.partition_b).values()
        out.append({k: va[k] - vb[k] for k in DIFFERENCE_METRICS})
    return out


def average_differences(series: SnapshotSeries) -> DifferenceTable:
    diffs = snapshot_differences(series)
    n = len(diffs)
    means = {k: sum(d[k] for d in diffs) / n for k in DIFFERENCE_METRICS}
    return DifferenceTable(means, n, series.label_a, series.label_b)
