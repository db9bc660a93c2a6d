"""Small-scale partition search used as an experimental oracle.

The objective is recomputed from scratch for every candidate partition;
nothing here relies on incremental deltas.
"""

from __future__ import annotations

from enum import Enum

from . import metrics
from .errors import InputError, RefusalError
from .graph import Graph
from .partition import MAX_ENUMERATION_NODES, Partition, enumerate_partitions, merge, move

# improvements smaller than this are treated as rounding noise
IMPROVEMENT_EPS = 1e-12


class Objective(str, Enum):
    MODULARITY = "modularity"
    QS = "qs"
    QDS = "qds"

    def evaluate(self, g: Graph, p: Partition) -> float:
        s = metrics.compute_stats(g, p)
        if self is Objective.MODULARITY:
            return metrics.modularity(s)
        if self is Objective.QS:
            return metrics.qs(s)
        return metrics.qds(s)


def _objective(obj: Objective | str) -> Objective:
    try:
        return Objective(obj)
    except ValueError:
        raise InputError(f"unknown objective {obj!r}; choose from {[o.value for o in Objective]}") from None


def exhaustive_best(g: Graph, obj: Objective | str) -> tuple[Partition, float]:
    """Maximize ``obj`` over every set partition; the first maximum in enumeration order wins."""
    obj = _objective(obj)
    if g.node_count > MAX_ENUMERATION_NODES:
        raise RefusalError(
            f"exhaustive search refused for {g.node_count} nodes (limit {MAX_ENUMERATION_NODES})"
        )
    best, best_val = None, float("-inf")
    for p in enumerate_partitions(g.node_count):
        val = obj.evaluate(g, p)
        if val > best_val:
            best, best_val = p, val
    return best, best_val


def _connected_pairs(g: Graph, p: Partition) -> list[tuple[int, int]]:
    a = p.assignment
    pairs = {(min(a[u], a[v]), max(a[u], a[v])) for u, v, _ in g.edges if a[u] != a[v]}
    return sorted(pairs)


def greedy_agglomerate(g: Graph, obj: Objective | str) -> tuple[Partition, float]:
    """Greedy merging from singletons, then single-node moves.

    Each round applies the best-improving merge of two connected communities
    (ties go to the lexicographically lowest pair). When no merge improves,
    nodes are swept in id order and moved to the best-improving neighbouring
    community until a full sweep changes nothing.
    """
    obj = _objective(obj)
    if not g.total_weight > 0:
        raise InputError("metrics undefined on empty graph")
    p = Partition.singletons(g.node_count)
    current = obj.evaluate(g, p)

    while True:
        best, best_val = None, current + IMPROVEMENT_EPS
        for a, b in _connected_pairs(g, p):
            cand = merge(p, a, b)
            val = obj.evaluate(g, cand)
            if val > best_val:
                best, best_val = cand, val
        if best is None:
            break
        p, current = best, best_val

    changed = True
    while changed:
        changed = False
        for node in range(g.node_count):
            own = p.assignment[node]
            targets = sorted({p.assignment[v] for v in g.neighbors[node]} - {own})
            best, best_val = None, current + IMPROVEMENT_EPS
            for c in targets:
                cand = move(p, node, c)
                val = obj.evaluate(g, cand)
                if val > best_val:
                    best, best_val = cand, val
            if best is not None:
                p, current = best, best_val
                changed = True
    return p, current
