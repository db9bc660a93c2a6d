"""Community assignments, partition file I/O and set-partition enumeration."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence, TextIO

from .errors import InputError, RefusalError

MAX_ENUMERATION_NODES = 13


@dataclass(frozen=True)
class Partition:
    """A total assignment of nodes to disjoint communities.

    The assignment is kept as a restricted growth string (community ids
    numbered in order of first appearance), so two partitions grouping
    the same nodes together compare equal.
    """

    assignment: tuple[int, ...]

    def __post_init__(self) -> None:
        top = -1
        for node, c in enumerate(self.assignment):
            if c < 0 or c > top + 1:
                raise InputError(
                    f"assignment is not in first-appearance order at node {node} "
                    "(use Partition.from_labels to renumber)"
                )
            top = max(top, c)

    @classmethod
    def from_labels(cls, labels: Sequence) -> "Partition":
        """Renumber arbitrary hashable labels densely in first-appearance order."""
        ids: dict = {}
        return cls(tuple(ids.setdefault(x, len(ids)) for x in labels))

    @classmethod
    def single(cls, node_count: int) -> "Partition":
        return cls((0,) * node_count)

    @classmethod
    def singletons(cls, node_count: int) -> "Partition":
        return cls(tuple(range(node_count)))

    @classmethod
    def _trusted(cls, assignment: tuple[int, ...]) -> "Partition":
        # caller guarantees first-appearance order
        p = object.__new__(cls)
        object.__setattr__(p, "assignment", assignment)
        return p

    @property
    def node_count(self) -> int:
        return len(self.assignment)

    @property
    def community_count(self) -> int:
        return max(self.assignment) + 1 if self.assignment else 0

    def members(self, c: int) -> list[int]:
        self._check_id(c)
        return [v for v, x in enumerate(self.assignment) if x == c]

    def communities(self) -> list[list[int]]:
        groups: list[list[int]] = [[] for _ in range(self.community_count)]
        for v, c in enumerate(self.assignment):
            groups[c].append(v)
        return groups

    def _check_id(self, c: int) -> None:
        if not 0 <= c < self.community_count:
            raise InputError(f"community id {c} out of range 0..{self.community_count - 1}")


def merge(p: Partition, a: int, b: int) -> Partition:
    """Unify communities ``a`` and ``b``; returns a new, re-densified partition."""
    p._check_id(a)
    p._check_id(b)
    if a == b:
        raise InputError(f"cannot merge community {a} with itself")
    keep, drop = min(a, b), max(a, b)
    # keep appears before drop, so this relabeling stays in first-appearance order
    return Partition._trusted(tuple(keep if c == drop else c - (c > drop) for c in p.assignment))


def move(p: Partition, node: int, c: int) -> Partition:
    """Reassign ``node`` to community ``c`` (a fresh id ``community_count`` opens a new one)."""
    if not 0 <= c <= p.community_count:
        raise InputError(f"community id {c} out of range")
    labels = list(p.assignment)
    labels[node] = c
    return Partition.from_labels(labels)


def parse_partition(text: str | TextIO, node_count: int) -> Partition:
    """Parse ``node_id community_id`` lines; every node must appear exactly once."""
    if not isinstance(text, str):
        text = text.read()
    labels: dict[int, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise InputError(f"line {lineno}: expected 'node_id community_id', got {line!r}")
        try:
            node = int(tokens[0])
        except ValueError:
            raise InputError(f"line {lineno}: node id {tokens[0]!r} is not an integer") from None
        if not 0 <= node < node_count:
            raise InputError(f"line {lineno}: unknown node id {node} (graph has {node_count} nodes)")
        if node in labels:
            raise InputError(f"line {lineno}: node {node} listed twice")
        labels[node] = tokens[1]
    missing = [v for v in range(node_count) if v not in labels]
    if missing:
        shown = ", ".join(map(str, missing[:20])) + (" ..." if len(missing) > 20 else "")
        raise InputError(f"partition is missing {len(missing)} node(s): {shown}")
    return Partition.from_labels([labels[v] for v in range(node_count)])


def format_partition(p: Partition) -> str:
    return "".join(f"{v} {c}\n" for v, c in enumerate(p.assignment))


def enumerate_partitions(node_count: int) -> Iterator[Partition]:
    """Yield every set partition of ``node_count`` nodes exactly once.

    Order is lexicographic over restricted growth strings, so the first
    partition is the single community and the last is all singletons.
    """
    if node_count < 1:
        raise InputError("enumerate_partitions needs at least one node")
    if node_count > MAX_ENUMERATION_NODES:
        raise RefusalError(
            f"refusing to enumerate partitions of {node_count} nodes: the Bell number "
            f"exceeds the guard for n > {MAX_ENUMERATION_NODES} (Bell(13) is already ~2.8e7)"
        )
    n = node_count
    a = [0] * n
    # b[i] = 1 + max(a[:i]); the largest value a[i] may take
    b = [1] * n
    while True:
        yield Partition._trusted(tuple(a))
        i = n - 1
        while i > 0 and a[i] == b[i]:
            i -= 1
        if i == 0:
            return
        a[i] += 1
        for j in range(i + 1, n):
            a[j] = 0
            b[j] = max(b[j - 1], a[j - 1] + 1)
