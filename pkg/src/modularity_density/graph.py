"""Immutable simple-graph representation and edge-list I/O.

Edge-list format, one edge per line::

    # comments start with '#', blank lines are ignored
    nodes 6          (optional header, declares isolated trailing nodes)
    0 1              (unweighted)
    0 2 2.5          (weighted)

Whether a file is directed or weighted is never inferred; callers say so.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, TextIO

import numpy as np

from .errors import InputError

Edge = tuple[int, int, float]


@dataclass(frozen=True)
class Graph:
    """A simple graph on nodes ``0 .. node_count - 1``.

    Undirected edges are stored with ``src < dst``. Use :meth:`from_edges`
    to build one from arbitrary orientation; the constructor only validates.
    """

    node_count: int
    edges: tuple[Edge, ...]
    directed: bool = False
    weighted: bool = False
    total_weight: float = field(init=False)

    def __post_init__(self) -> None:
        if self.node_count < 0:
            raise InputError(f"node_count must be non-negative, got {self.node_count}")
        seen: set[tuple[int, int]] = set()
        total = 0.0
        for u, v, w in self.edges:
            if not (0 <= u < self.node_count and 0 <= v < self.node_count):
                raise InputError(f"edge ({u}, {v}) references a node outside 0..{self.node_count - 1}")
            if u == v:
                raise InputError(f"self-loop on node {u}")
            if not self.directed and u > v:
                raise InputError(f"undirected edge ({u}, {v}) is not in canonical orientation")
            if (u, v) in seen:
                raise InputError(f"duplicate edge ({u}, {v})")
            if not w > 0:
                raise InputError(f"edge ({u}, {v}) has non-positive weight {w}")
            if not self.weighted and w != 1.0:
                raise InputError(f"unweighted graph has edge ({u}, {v}) with weight {w}")
            seen.add((u, v))
            total += w
        object.__setattr__(self, "total_weight", total)

    @classmethod
    def from_edges(
        cls,
        node_count: int,
        edges: Iterable[tuple[int, int] | tuple[int, int, float]],
        directed: bool = False,
        weighted: bool = False,
    ) -> "Graph":
        """Build a graph, canonicalizing undirected orientation.

        Edges may be ``(u, v)`` pairs (weight 1) or ``(u, v, w)`` triples.
        """
        canon = []
        for e in edges:
            u, v = int(e[0]), int(e[1])
            w = float(e[2]) if len(e) > 2 else 1.0
            if not directed and u > v:
                u, v = v, u
            canon.append((u, v, w))
        return cls(node_count, tuple(canon), directed=directed, weighted=weighted)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def src(self) -> np.ndarray:
        return np.fromiter((e[0] for e in self.edges), dtype=np.int64, count=len(self.edges))

    @cached_property
    def dst(self) -> np.ndarray:
        return np.fromiter((e[1] for e in self.edges), dtype=np.int64, count=len(self.edges))

    @cached_property
    def weights(self) -> np.ndarray:
        return np.fromiter((e[2] for e in self.edges), dtype=np.float64, count=len(self.edges))

    @cached_property
    def neighbors(self) -> tuple[tuple[int, ...], ...]:
        """Adjacency ignoring direction, each list sorted."""
        adj: list[set[int]] = [set() for _ in range(self.node_count)]
        for u, v, _ in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return tuple(tuple(sorted(a)) for a in adj)

    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset((u, v) for u, v, _ in self.edges)


def parse_edge_list(text: str | TextIO, directed: bool = False, weighted: bool = False) -> Graph:
    """Parse edge-list text into a :class:`Graph`.

    Errors carry the 1-based line number of the offending line.
    """
    if not isinstance(text, str):
        text = text.read()
    declared: int | None = None
    edges: list[Edge] = []
    seen: dict[tuple[int, int], int] = {}
    max_id = -1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if tokens[0] == "nodes":
            if len(tokens) != 2 or declared is not None:
                raise InputError(f"line {lineno}: malformed or repeated 'nodes' header")
            declared = _parse_id(tokens[1], lineno)
            continue
        if len(tokens) == 2:
            if weighted:
                raise InputError(f"line {lineno}: missing weight column in weighted edge list")
            w = 1.0
        elif len(tokens) == 3:
            if not weighted:
                raise InputError(f"line {lineno}: weight column present but graph is unweighted")
            try:
                w = float(tokens[2])
            except ValueError:
                raise InputError(f"line {lineno}: weight {tokens[2]!r} is not a number") from None
            if not w > 0 or w == float("inf"):
                raise InputError(f"line {lineno}: weight must be positive and finite, got {tokens[2]}")
        else:
            raise InputError(f"line {lineno}: expected 'src dst' or 'src dst weight', got {line!r}")
        u, v = _parse_id(tokens[0], lineno), _parse_id(tokens[1], lineno)
        if u == v:
            raise InputError(f"line {lineno}: self-loop on node {u}")
        key = (u, v) if directed else (min(u, v), max(u, v))
        if key in seen:
            raise InputError(f"line {lineno}: duplicate edge {key} (first seen on line {seen[key]})")
        seen[key] = lineno
        edges.append((key[0], key[1], w))
        max_id = max(max_id, u, v)
    node_count = max_id + 1
    if declared is not None:
        if declared < node_count:
            raise InputError(f"'nodes {declared}' header is smaller than the largest node id {max_id}")
        node_count = declared
    return Graph(node_count, tuple(edges), directed=directed, weighted=weighted)


def _parse_id(token: str, lineno: int) -> int:
    try:
        value = int(token)
    except ValueError:
        raise InputError(f"line {lineno}: node id {token!r} is not an integer") from None
    if value < 0:
        raise InputError(f"line {lineno}: node id {value} is negative")
    return value


def format_edge_list(g: Graph) -> str:
    """Serialize to the edge-list format; always writes the ``nodes`` header."""
    lines = [f"nodes {g.node_count}"]
    if g.weighted:
        lines.extend(f"{u} {v} {w!r}" for u, v, w in g.edges)
    else:
        lines.extend(f"{u} {v}" for u, v, _ in g.edges)
    return "\n".join(lines) + "\n"


def symmetrize(g: Graph) -> Graph:
    """Collapse a directed graph to an undirected weighted one.

    Each unordered pair gets the summed weight of both arcs.
    """
    if not g.directed:
        raise InputError("symmetrize expects a directed graph")
    merged: dict[tuple[int, int], float] = {}
    for u, v, w in g.edges:
        key = (u, v) if u < v else (v, u)
        merged[key] = merged.get(key, 0.0) + w
    edges = tuple((u, v, w) for (u, v), w in sorted(merged.items()))
    return Graph(g.node_count, edges, directed=False, weighted=True)
