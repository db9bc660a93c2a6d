"""Deterministic constructors for the benchmark graphs, plus seeded random graphs."""

from __future__ import annotations

from itertools import combinations, islice, product
from typing import Sequence

import numpy as np

from .closed_forms import RingSpec
from .errors import InputError
from .graph import Graph
from .partition import Partition


def _clique_edges(offset: int, size: int) -> list[tuple[int, int]]:
    return [(offset + i, offset + j) for i, j in combinations(range(size), 2)]


def complete_graph(m: int) -> Graph:
    if m < 1:
        raise InputError(f"complete graph needs m >= 1, got {m}")
    return Graph.from_edges(m, _clique_edges(0, m))


def two_cliques(m: int, bridges: int) -> tuple[Graph, Partition]:
    """Two K_m (nodes ``0..m-1`` and ``m..2m-1``) plus ``bridges`` cross edges.

    Bridges are taken in row-major order over (node of A, node of B).
    """
    if m < 2:
        raise InputError(f"cliques need m >= 2, got {m}")
    if not 0 <= bridges <= m * m:
        raise InputError(f"bridges must be in 0..{m * m}, got {bridges}")
    edges = _clique_edges(0, m) + _clique_edges(m, m)
    edges += [(i, m + j) for i, j in islice(product(range(m), repeat=2), bridges)]
    return Graph.from_edges(2 * m, edges), Partition((0,) * m + (1,) * m)


def clique_pair_vs_tree_pair() -> tuple[Graph, Graph, Partition, Partition]:
    """Two K4 joined by one edge, and two 7-node paths joined by one edge.

    Both graphs have 13 edges and six edges inside each community.
    """
    cliques = Graph.from_edges(8, _clique_edges(0, 4) + _clique_edges(4, 4) + [(0, 4)])
    path = [(i, i + 1) for i in range(6)]
    trees = Graph.from_edges(14, path + [(7 + u, 7 + v) for u, v in path] + [(6, 7)])
    return cliques, trees, Partition((0,) * 4 + (1,) * 4), Partition((0,) * 7 + (1,) * 7)


def ring_of_cliques(spec: RingSpec) -> tuple[Graph, Partition, Partition]:
    """Ring of cliques; returns the graph, the per-clique and the paired partition.

    Clique ``i`` holds nodes ``i*m .. i*m+m-1``; node 0 of clique ``i`` links
    to node 1 of clique ``i+1 (mod n)``.
    """
    n, m = spec.n, spec.m
    edges: list[tuple[int, int]] = []
    for i in range(n):
        edges += _clique_edges(i * m, m)
    edges += [(i * m, ((i + 1) % n) * m + 1) for i in range(n)]
    single = Partition(tuple(v // m for v in range(n * m)))
    pairs = Partition(tuple(v // (2 * m) for v in range(n * m)))
    return Graph.from_edges(n * m, edges), single, pairs


def _two_pairs_offsets(m: int, p: int) -> tuple[int, int, int, int]:
    return 0, m, 2 * m, 2 * m + p


def ring_bridges(m: int, p: int) -> list[tuple[int, int]]:
    """Bridges K_m1-K_m2, K_m1-K_p1, K_p1-K_p2, K_p2-K_m2 (distinct endpoints)."""
    m1, m2, p1, p2 = _two_pairs_offsets(m, p)
    return [(m1, m2), (m1 + 1, p1), (p1 + 1, p2), (p2 + 1, m2 + 1)]


def hub_bridges(m: int, p: int) -> list[tuple[int, int]]:
    """Bridges K_m1-K_m2, K_m1-K_p1, K_m1-K_p2, K_p1-K_p2.

    With both small cliques hanging off the same large clique, merging the
    small cliques leaves the large cliques' terms unchanged.
    """
    m1, m2, p1, p2 = _two_pairs_offsets(m, p)
    return [(m1, m2), (m1 + 1, p1), (m1 + 2, p2), (p1 + 1, p2 + 1)]


def two_pairs_cliques(
    m: int, p: int, bridges: Sequence[tuple[int, int]] | None = None
) -> tuple[Graph, Partition, Partition]:
    """Two K_m and two K_p plus four bridges.

    Nodes: K_m1 ``0..m-1``, K_m2 ``m..2m-1``, K_p1 ``2m..2m+p-1``, K_p2 after.
    Returns the graph, the four-clique partition and the partition with the
    two K_p merged. ``bridges`` defaults to :func:`ring_bridges`.
    """
    if m < 4 or not 3 <= p < m:
        raise InputError(f"need m >= 4 and 3 <= p < m, got m={m}, p={p}")
    if bridges is None:
        bridges = ring_bridges(m, p)
    bridges = [tuple(b) for b in bridges]
    if len(bridges) != 4:
        raise InputError(f"exactly 4 bridges required, got {len(bridges)}")
    offsets = _two_pairs_offsets(m, p)
    labels = [0] * m + [1] * m + [2] * p + [3] * p
    total = 2 * m + 2 * p
    canon = set()
    for u, v in bridges:
        if not (0 <= u < total and 0 <= v < total):
            raise InputError(f"bridge ({u}, {v}) references a node outside 0..{total - 1}")
        if labels[u] == labels[v]:
            raise InputError(f"bridge ({u}, {v}) lies inside a single clique")
        key = (min(u, v), max(u, v))
        if key in canon:
            raise InputError(f"duplicate bridge {key}")
        canon.add(key)
    edges: list[tuple[int, int]] = []
    for off, size in zip(offsets, (m, m, p, p)):
        edges += _clique_edges(off, size)
    g = Graph.from_edges(total, edges + list(bridges))
    return g, Partition(tuple(labels)), Partition(tuple(min(x, 2) for x in labels))


def random_graph(
    nodes: int, edge_probability: float, weighted: bool = False, directed: bool = False, seed: int = 0
) -> Graph:
    """Erdos-Renyi G(n, p); weights uniform on (0, 2] when weighted."""
    if nodes < 0:
        raise InputError(f"nodes must be non-negative, got {nodes}")
    if not 0.0 <= edge_probability <= 1.0:
        raise InputError(f"edge_probability must be in [0, 1], got {edge_probability}")
    rng = np.random.default_rng(seed)
    if directed:
        pairs = [(u, v) for u in range(nodes) for v in range(nodes) if u != v]
    else:
        pairs = list(combinations(range(nodes), 2))
    keep = rng.random(len(pairs)) < edge_probability
    chosen = [pr for pr, k in zip(pairs, keep) if k]
    if weighted:
        w = 2.0 - rng.uniform(0.0, 2.0, size=len(chosen))
        edges = [(u, v, float(x)) for (u, v), x in zip(chosen, w)]
    else:
        edges = chosen
    return Graph.from_edges(nodes, edges, directed=directed, weighted=weighted)
