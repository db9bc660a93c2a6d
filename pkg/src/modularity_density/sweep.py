"""Resolution-limit sweep over ring-of-cliques parameters."""

from __future__ import annotations

from dataclasses import astuple, dataclass
from typing import Iterable

from .closed_forms import RingSpec, modularity_merge_threshold, ring_qds_pairs, ring_qds_single
from .generators import ring_of_cliques
from .metrics import compute_stats, modularity, qds

# Q(single) == Q(pairs) exactly when n == m(m-1)+2; don't let rounding pick a side
PREFERENCE_EPS = 1e-12


@dataclass(frozen=True)
class RingRow:
    n: int
    m: int
    q_single: float
    q_pairs: float
    qds_single: float
    qds_pairs: float
    threshold_flag: bool
    q_prefers_pairs: bool
    qds_prefers_single: bool
    agreement: bool
    closed_form_error: float


TSV_HEADER = tuple(RingRow.__dataclass_fields__)


def ring_row(n: int, m: int) -> RingRow:
    spec = RingSpec(n, m)
    g, single, pairs = ring_of_cliques(spec)
    s1, s2 = compute_stats(g, single), compute_stats(g, pairs)
    q1, q2, d1, d2 = modularity(s1), modularity(s2), qds(s1), qds(s2)
    flag = modularity_merge_threshold(n, m)
    q_pairs_wins = q2 - q1 > PREFERENCE_EPS
    return RingRow(
        n=n,
        m=m,
        q_single=q1,
        q_pairs=q2,
        qds_single=d1,
        qds_pairs=d2,
        threshold_flag=flag,
        q_prefers_pairs=q_pairs_wins,
        qds_prefers_single=d1 > d2,
        agreement=flag == q_pairs_wins,
        closed_form_error=max(abs(d1 - ring_qds_single(spec)), abs(d2 - ring_qds_pairs(spec))),
    )


def sweep_ring(n_values: Iterable[int], m_values: Iterable[int]) -> list[RingRow]:
    m_values = list(m_values)
    return [ring_row(n, m) for n in n_values for m in m_values]


def rows_to_tsv(rows: list[RingRow], precision: int = 4) -> str:
    def cell(x) -> str:
        if isinstance(x, bool):
            return str(int(x))
        if isinstance(x, float):
            return f"{x:.{precision}e}" if x and abs(x) < 10**-precision else f"{x:.{precision}f}"
        return str(x)

    lines = ["\t".join(TSV_HEADER)]
    lines += ["\t".join(cell(x) for x in astuple(r)) for r in rows]
    return "\n".join(lines) + "\n"
