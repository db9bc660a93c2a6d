"""Analytic Modularity Density values for the clique resolution-limit families.

These are evaluated independently of :mod:`metrics` and serve as oracles
for it (and vice versa).

The ring formulas assume every community touches each neighbouring
community through exactly one edge. On the generated ring that holds for
the per-clique partition when n >= 4 and for the paired partition when
n >= 6; smaller rings have doubled bridges and the formulas drift from the
graph value.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError


@dataclass(frozen=True)
class RingSpec:
    """A ring of ``n`` cliques of ``m`` nodes, consecutive cliques joined by one edge."""

    n: int
    m: int

    def __post_init__(self) -> None:
        if self.n < 2 or self.n % 2:
            raise InputError(f"ring needs an even clique count n >= 2, got {self.n}")
        if self.m < 3:
            raise InputError(f"ring cliques need m >= 3 nodes, got {self.m}")


def clique_split_qds(m: int, m1: int, m2: int) -> float:
    """Qds of K_m split into parts of ``m1`` and ``m2`` nodes (the whole clique scores 0)."""
    if m1 < 1 or m2 < 1 or m1 + m2 != m:
        raise InputError(f"need m1, m2 >= 1 with m1 + m2 == m, got m={m}, m1={m1}, m2={m2}")
    if m < 2:
        raise InputError(f"clique must have at least 2 nodes, got {m}")
    return ((m1 - m2) ** 2 - m) / (m * (m - 1)) - (m1**2 + m2**2) / m**2


def ring_qds_single(spec: RingSpec) -> float:
    """Qds of the ring with one community per clique."""
    n, m = spec.n, spec.m
    return m * (m - 1) / (m * (m - 1) + 2) - 1 / n - 2 / (m**3 * (m - 1) + 2 * m**2)


def ring_qds_pairs(spec: RingSpec) -> float:
    """Qds of the ring with consecutive cliques paired into n/2 communities."""
    n, m = spec.n, spec.m
    a = m * (m - 1) + 1
    return (
        a**2 / ((m * (m - 1) + 2) * m * (2 * m - 1))
        - 2 * a**2 / (n * (m * (2 * m - 1)) ** 2)
        - 1 / (4 * m**3 * (m - 1) + 8 * m**2)
    )


def two_pairs_qds_delta(m: int, p: int) -> float:
    """Qds(four clique communities) minus Qds(small cliques merged).

    Network: two K_m and two K_p joined by four bridges, one of them between
    the two K_p. Exact for the layout where both K_p attach to the same K_m
    (see :func:`generators.hub_bridges`).
    """
    if m < 4 or not 3 <= p < m:
        raise InputError(f"need m >= 4 and 3 <= p < m, got m={m}, p={p}")
    edges = m * (m - 1) + p * (p - 1) + 4
    a = p * (p - 1)
    inner = (
        a
        - 1 / p**2
        - (a + 2) ** 2 / (2 * edges)
        - (a + 1) ** 2 / (p * (2 * p - 1))
        + (a + 1) ** 2 * (a + 2) ** 2 / (p**2 * (2 * p - 1) ** 2 * edges)
    )
    return inner / edges


def modularity_merge_threshold(n: int, m: int) -> bool:
    """True when modularity prefers pairing consecutive cliques of a ring: m(m-1)+2 < n."""
    return m * (m - 1) + 2 < n
