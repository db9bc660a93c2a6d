import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from modularity_density import metrics
from modularity_density.errors import InputError
from modularity_density.generators import complete_graph, random_graph, two_cliques
from modularity_density.graph import Graph, symmetrize
from modularity_density.metrics import (
    community_quality,
    compute_stats,
    modularity,
    qds,
    qs,
    report,
    report_to_text,
    report_to_tsv,
    split_penalty,
)
from modularity_density.partition import Partition

from oracles import modularity_pairs, qds_pairs, split_penalty_pairs


def stats_for(g, labels):
    return compute_stats(g, Partition.from_labels(labels))


@st.composite
def graph_and_partition(draw, directed=None, weighted=None):
    n = draw(st.integers(2, 10))
    g = random_graph(
        n,
        draw(st.floats(0.1, 1.0)),
        weighted=draw(st.booleans()) if weighted is None else weighted,
        directed=draw(st.booleans()) if directed is None else directed,
        seed=draw(st.integers(0, 2**31)),
    )
    labels = draw(st.lists(st.integers(0, 3), min_size=n, max_size=n))
    return g, Partition.from_labels(labels)


def test_stats_two_disjoint_cliques():
    g, p = two_cliques(4, 0)
    s = compute_stats(g, p)
    assert s.in_count.tolist() == [6, 6]
    assert not s.pair_count.any()


def test_stats_single_k8():
    s = compute_stats(complete_graph(8), Partition.single(8))
    assert s.in_count.tolist() == [28]
    assert s.pair_count.shape == (1, 1) and s.pair_count[0, 0] == 0


def test_stats_two_cliques_four_bridges():
    g, p = two_cliques(4, 4)
    s = compute_stats(g, p)
    assert s.pair_count[0, 1] == s.pair_count[1, 0] == 4
    assert s.in_count.tolist() == [6, 6]
    assert s.total_weight == 16


def test_stats_size_mismatch():
    with pytest.raises(InputError, match="partition covers"):
        compute_stats(complete_graph(3), Partition.single(4))


def test_empty_graph_is_an_error():
    s = compute_stats(Graph(3, ()), Partition.single(3))
    for f in (modularity, split_penalty, qs, qds):
        with pytest.raises(InputError, match="empty graph"):
            f(s)


def test_worked_values():
    g, p = two_cliques(4, 0)
    assert modularity(compute_stats(g, p)) == pytest.approx(0.5, abs=1e-12)
    assert qds(compute_stats(g, Partition.single(8))) == pytest.approx(12 / 49, abs=1e-12)
    g, p = two_cliques(4, 4)
    assert split_penalty(compute_stats(g, p)) == pytest.approx(0.25, abs=1e-12)
    g, p = two_cliques(4, 16)
    assert split_penalty(compute_stats(g, p)) == pytest.approx(16 / 28, abs=1e-12)
    assert qds(compute_stats(g, p)) == pytest.approx(-9 / 14, abs=1e-12)


def test_directed_stats_orientation():
    # 0->1 inside, 1->2 and 3->0 across, communities {0,1} {2,3}
    g = Graph.from_edges(4, [(0, 1), (1, 2), (3, 0), (2, 3)], directed=True)
    s = stats_for(g, [0, 0, 1, 1])
    assert s.pair_weight.tolist() == [[0, 1], [1, 0]]
    assert s.out_weight_from.tolist() == [1, 1]
    assert s.out_weight_to.tolist() == [1, 1]
    # weight 4, in=1 each: Q = 2 * (1/4 - (1+1)(1+1)/16)
    assert modularity(s) == pytest.approx(0.0, abs=1e-12)
    assert split_penalty(s) == pytest.approx(0.5)
    # directed density 1/(2*1) = 0.5 each
    expected = 2 * (0.25 * 0.5 - 4 / 16 * 0.25 - 0.25 * 0.25)
    assert qds(s) == pytest.approx(expected, abs=1e-12)


def test_community_quality_clique_with_two_bridges():
    g, p = two_cliques(4, 2)
    cq = community_quality(compute_stats(g, p), 0)
    assert cq.intra_edges == 6
    assert cq.contraction == 3
    assert cq.inter_edges == 2
    assert cq.expansion == 0.5
    assert cq.conductance == pytest.approx(2 / 14)


def test_community_quality_isolated_and_singleton():
    g, p = two_cliques(4, 0)
    cq = community_quality(compute_stats(g, p), 1)
    assert (cq.inter_edges, cq.expansion, cq.conductance) == (0, 0, 0)
    star = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    cq = community_quality(stats_for(star, [0, 1, 1, 1]), 0)
    assert cq == (0, 0, 3, 3, 1)
    with pytest.raises(InputError):
        community_quality(stats_for(star, [0, 1, 1, 1]), 2)


def test_directed_community_quality():
    g = Graph.from_edges(3, [(0, 1), (1, 0), (1, 2)], directed=True)
    cq = community_quality(stats_for(g, [0, 0, 1]), 0)
    assert cq.contraction == 1.0
    assert cq.conductance == pytest.approx(1 / 3)


def test_singleton_density_convention():
    g = complete_graph(3)
    s = stats_for(g, [0, 1, 1])
    assert metrics.internal_density(s).tolist() == [0.0, 1.0]
    assert metrics.internal_density(s, singleton_density=1.0).tolist() == [1.0, 1.0]
    # oracle: singleton keeps only its penalty, the pair loses 4/9 to degree
    assert qds(s) == pytest.approx(-1 / 3 + (1 / 3 - 4 / 9 - 1 / 3), abs=1e-12)


@given(graph_and_partition())
def test_matches_pairwise_oracle(gp):
    g, p = gp
    if g.total_weight == 0:
        return
    s = compute_stats(g, p)
    args = (g.node_count, g.edges, p.assignment, g.directed)
    assert modularity(s) == pytest.approx(modularity_pairs(*args), abs=1e-9)
    assert split_penalty(s) == pytest.approx(split_penalty_pairs(*args), abs=1e-9)
    assert qds(s) == pytest.approx(qds_pairs(*args), abs=1e-9)


@given(graph_and_partition())
def test_stats_invariants(gp):
    g, p = gp
    s = compute_stats(g, p)
    assert s.sizes.sum() == g.node_count
    if g.directed:
        assert s.in_weight.sum() + s.pair_weight.sum() == pytest.approx(g.total_weight)
    else:
        assert np.array_equal(s.pair_weight, s.pair_weight.T)
        assert np.allclose(s.out_weight_from, s.out_weight_to)
        assert s.in_weight.sum() + s.pair_weight.sum() / 2 == pytest.approx(g.total_weight)
        if g.total_weight:
            cut = sum(w for u, v, w in g.edges if p.assignment[u] != p.assignment[v])
            assert split_penalty(s) == pytest.approx(cut / g.total_weight, abs=1e-12)
    d, dp = metrics.internal_density(s), metrics.pair_density(s)
    assert ((0 <= d) & (d <= 1)).all()
    assert ((0 <= dp) & (dp <= 1)).all()


@given(graph_and_partition())
def test_qs_is_q_minus_sp(gp):
    g, p = gp
    if g.total_weight == 0:
        return
    r = report(g, p)
    assert r.qs == r.q - r.sp
    s = compute_stats(g, p)
    assert abs(qs(s) - (modularity(s) - split_penalty(s))) <= 1e-12


@given(graph_and_partition())
def test_single_community(gp):
    g, p = gp
    if g.total_weight == 0:
        return
    r = report(g, Partition.single(g.node_count))
    assert abs(r.q) < 1e-12 and r.sp == 0 and abs(r.qs) < 1e-12
    if not g.weighted and not g.directed:
        dens = g.edge_count / math.comb(g.node_count, 2)
        assert r.qds == pytest.approx(dens - dens**2, abs=1e-12)


@given(graph_and_partition(weighted=False))
def test_unit_weights_equal_unweighted(gp):
    g, p = gp
    if g.total_weight == 0:
        return
    w = Graph(g.node_count, g.edges, directed=g.directed, weighted=True)
    assert report(w, p).values() == report(g, p).values()


@given(graph_and_partition(directed=False))
def test_doubled_digraph_reduces_to_undirected(gp):
    g, p = gp
    if g.total_weight == 0:
        return
    arcs = [(u, v, w) for u, v, w in g.edges] + [(v, u, w) for u, v, w in g.edges]
    dg = Graph(g.node_count, tuple(arcs), directed=True, weighted=g.weighted)
    q_directed = modularity(compute_stats(dg, p))
    assert abs(q_directed - modularity(compute_stats(g, p))) <= 1e-12
    assert abs(q_directed - modularity(compute_stats(symmetrize(dg), p))) <= 1e-12


@given(graph_and_partition())
def test_conductance_in_unit_interval(gp):
    g, p = gp
    r = report(g, p) if g.total_weight else None
    if r is None:
        return
    assert all(0 <= c.conductance <= 1 for c in r.per_community)


def test_report_aggregates_and_formats():
    g, p = two_cliques(4, 2)
    r = report(g, p)
    assert r.intra_edges == 12 and r.inter_edges == 4
    assert r.contraction == 3 and r.expansion == 0.5
    assert r.conductance == pytest.approx(1 / 7)
    tsv = report_to_tsv(r).splitlines()
    assert tsv[0].split("\t") == [
        "scope", "size", "intra_edges", "contraction", "inter_edges", "expansion", "conductance",
        "q", "sp", "qs", "qds",
    ]
    assert len(tsv) == 4
    assert tsv[-1].split("\t")[7:] == ["0.3571", "0.1429", "0.2143", "0.3393"]
    text = report_to_text(r, precision=6)
    assert "0.357143" in text and "Communities" in text
