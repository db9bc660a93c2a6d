"""Modularity, Split Penalty, Qs, Modularity Density and per-community quality.

Every metric is a function of :class:`CommunityStats`, the per-community and
per-community-pair edge tallies gathered in one pass over the edges. Weighted
graphs use weight sums everywhere except inside the two densities, which are
always computed from plain edge counts so they stay in ``[0, 1]``.

For undirected graphs ``pair_weight[i, j]`` is the weight between communities
``i`` and ``j`` and the matrix is symmetric. For directed graphs it is the
weight of arcs from ``i`` to ``j``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import InputError
from .graph import Graph
from .partition import Partition


@dataclass(frozen=True)
class CommunityStats:
    sizes: np.ndarray
    in_weight: np.ndarray
    in_count: np.ndarray
    out_weight_from: np.ndarray
    out_weight_to: np.ndarray
    pair_weight: np.ndarray
    pair_count: np.ndarray
    total_weight: float
    directed: bool

    @property
    def community_count(self) -> int:
        return len(self.sizes)


def compute_stats(g: Graph, p: Partition) -> CommunityStats:
    if p.node_count != g.node_count:
        raise InputError(f"partition covers {p.node_count} nodes but graph has {g.node_count}")
    k = p.community_count
    a = np.asarray(p.assignment, dtype=np.int64)
    sizes = np.bincount(a, minlength=k).astype(np.float64)
    cs, cd, w = a[g.src], a[g.dst], g.weights
    internal = cs == cd
    in_weight = np.bincount(cs[internal], weights=w[internal], minlength=k)
    in_count = np.bincount(cs[internal], minlength=k).astype(np.float64)
    cross = ~internal
    flat = cs[cross] * k + cd[cross]
    pair_weight = np.bincount(flat, weights=w[cross], minlength=k * k).reshape(k, k)
    pair_count = np.bincount(flat, minlength=k * k).reshape(k, k).astype(np.float64)
    if not g.directed:
        pair_weight = pair_weight + pair_weight.T
        pair_count = pair_count + pair_count.T
    return CommunityStats(
        sizes=sizes,
        in_weight=in_weight,
        in_count=in_count,
        out_weight_from=pair_weight.sum(axis=1),
        out_weight_to=pair_weight.sum(axis=0),
        pair_weight=pair_weight,
        pair_count=pair_count,
        total_weight=g.total_weight,
        directed=g.directed,
    )


def _require_edges(s: CommunityStats) -> float:
    if not s.total_weight > 0:
        raise InputError("metrics undefined on empty graph")
    return s.total_weight


def modularity(s: CommunityStats) -> float:
    m = _require_edges(s)
    if s.directed:
        expected = (s.in_weight + s.out_weight_to) * (s.in_weight + s.out_weight_from) / m**2
    else:
        expected = ((2 * s.in_weight + s.out_weight_from) / (2 * m)) ** 2
    return float(np.sum(s.in_weight / m - expected))


def split_penalty(s: CommunityStats) -> float:
    m = _require_edges(s)
    # directed: outgoing arcs only; undirected: each bridge is seen from both ends
    scale = m if s.directed else 2 * m
    return float(np.sum(s.pair_weight.sum(axis=1) / scale))


def qs(s: CommunityStats) -> float:
    return modularity(s) - split_penalty(s)


def internal_density(s: CommunityStats, singleton_density: float = 0.0) -> np.ndarray:
    """Fraction of realized internal node pairs.

    A singleton has no node pairs; it gets ``singleton_density`` (0 by
    default, which drops its positive and degree terms from Qds).
    """
    possible = s.sizes * (s.sizes - 1)
    if not s.directed:
        possible = possible / 2
    with np.errstate(divide="ignore", invalid="ignore"):
        return np.where(possible > 0, s.in_count / possible, singleton_density)


def pair_density(s: CommunityStats) -> np.ndarray:
    """``pair_count[i, j] / (|c_i| |c_j|)`` with a zero diagonal."""
    d = s.pair_count / np.outer(s.sizes, s.sizes)
    np.fill_diagonal(d, 0.0)
    return d


def qds(s: CommunityStats, singleton_density: float = 0.0) -> float:
    m = _require_edges(s)
    d = internal_density(s, singleton_density)
    dp = pair_density(s)
    if s.directed:
        degree = (s.in_weight + s.out_weight_to) * (s.in_weight + s.out_weight_from) / m**2 * d**2
        penalty = (s.pair_weight / m * dp).sum(axis=1)
    else:
        degree = ((2 * s.in_weight + s.out_weight_from) / (2 * m) * d) ** 2
        penalty = (s.pair_weight / (2 * m) * dp).sum(axis=1)
    return float(np.sum(s.in_weight / m * d - degree - penalty))


class CommunityQuality(NamedTuple):
    intra_edges: float
    contraction: float
    inter_edges: float
    expansion: float
    conductance: float


def community_quality(s: CommunityStats, c: int) -> CommunityQuality:
    if not 0 <= c < s.community_count:
        raise InputError(f"community id {c} out of range 0..{s.community_count - 1}")
    size = s.sizes[c]
    intra = float(s.in_weight[c])
    inter = float(s.out_weight_from[c])
    internal_ends = intra if s.directed else 2 * intra
    boundary = internal_ends + inter
    return CommunityQuality(
        intra_edges=intra,
        contraction=internal_ends / size,
        inter_edges=inter,
        expansion=inter / size,
        conductance=inter / boundary if boundary > 0 else 0.0,
    )


METRIC_NAMES = ("q", "sp", "qs", "qds", "intra_edges", "contraction", "inter_edges", "expansion", "conductance")


@dataclass(frozen=True)
class MetricReport:
    """All metrics for one (graph, partition).

    Aggregates: intra/inter-edges are summed over communities, contraction,
    expansion and conductance are plain means over communities.
    """

    q: float
    sp: float
    qs: float
    qds: float
    per_community: tuple[CommunityQuality, ...]
    sizes: tuple[int, ...]

    @property
    def intra_edges(self) -> float:
        return float(sum(c.intra_edges for c in self.per_community))

    @property
    def inter_edges(self) -> float:
        return float(sum(c.inter_edges for c in self.per_community))

    @property
    def contraction(self) -> float:
        return _mean([c.contraction for c in self.per_community])

    @property
    def expansion(self) -> float:
        return _mean([c.expansion for c in self.per_community])

    @property
    def conductance(self) -> float:
        return _mean([c.conductance for c in self.per_community])

    def values(self) -> dict[str, float]:
        return {name: getattr(self, name) for name in METRIC_NAMES}


def _mean(xs: list[float]) -> float:
    return sum(xs) / len(xs)


def report(g: Graph, p: Partition) -> MetricReport:
    s = compute_stats(g, p)
    q = modularity(s)
    sp = split_penalty(s)
    return MetricReport(
        q=q,
        sp=sp,
        qs=q - sp,
        qds=qds(s),
        per_community=tuple(community_quality(s, c) for c in range(s.community_count)),
        sizes=tuple(int(x) for x in s.sizes),
    )


_COLUMNS = ("scope", "size", *METRIC_NAMES[4:], *METRIC_NAMES[:4])


def report_to_tsv(r: MetricReport, precision: int = 4) -> str:
    """One row per community plus an ``all`` summary row carrying Q, SP, Qs, Qds."""
    f = f"{{:.{precision}f}}"
    lines = ["\t".join(_COLUMNS)]
    for c, (size, cq) in enumerate(zip(r.sizes, r.per_community)):
        lines.append("\t".join([str(c), str(size), *(f.format(x) for x in cq), "", "", "", ""]))
    summary = [r.intra_edges, r.contraction, r.inter_edges, r.expansion, r.conductance, r.q, r.sp, r.qs, r.qds]
    lines.append("\t".join(["all", str(sum(r.sizes)), *(f.format(x) for x in summary)]))
    return "\n".join(lines) + "\n"


def report_to_text(r: MetricReport, precision: int = 4) -> str:
    f = f"{{:.{precision}f}}"
    labels = {
        "q": "Q", "sp": "SP", "qs": "Qs", "qds": "Qds",
        "intra_edges": "Intra-edges (sum)", "contraction": "Contraction (mean)",
        "inter_edges": "Inter-edges (sum)", "expansion": "Expansion (mean)",
        "conductance": "Conductance (mean)",
    }
    vals = r.values()
    width = max(len(v) for v in labels.values())
    out = [f"{labels[k]:<{width}}  {f.format(vals[k])}" for k in METRIC_NAMES]
    out.append(f"{'Communities':<{width}}  {len(r.sizes)}")
    out.append("")
    header = ("comm", "size", "intra", "contr", "inter", "expan", "cond")
    rows = [header] + [
        (str(c), str(size), *(f.format(x) for x in cq)) for c, (size, cq) in enumerate(zip(r.sizes, r.per_community))
    ]
    widths = [max(len(row[i]) for row in rows) for i in range(len(header))]
    out.extend("  ".join(cell.rjust(wd) for cell, wd in zip(row, widths)) for row in rows)
    return "\n".join(out) + "\n"
