import pytest
from hypothesis import given, strategies as st

from modularity_density.errors import InputError
from modularity_density.generators import random_graph
from modularity_density.graph import Graph, format_edge_list, parse_edge_list, symmetrize


def test_parse_triangle():
    g = parse_edge_list("0 1\n1 2\n0 2")
    assert g.node_count == 3
    assert g.edge_count == 3
    assert g.total_weight == 3
    assert g.edge_set() == {(0, 1), (1, 2), (0, 2)}


def test_parse_weighted():
    g = parse_edge_list("0 1 2.5\n1 2 0.5", weighted=True)
    assert g.total_weight == 3.0
    assert g.weighted


def test_comments_blank_lines_and_header():
    text = "# a comment\n\nnodes 5\n0 1  # trailing\n\n2 1\n"
    g = parse_edge_list(text)
    assert g.node_count == 5
    assert g.edges == ((0, 1, 1.0), (1, 2, 1.0))


def test_undirected_orientation_is_canonical_directed_kept():
    assert parse_edge_list("3 1").edges == ((1, 3, 1.0),)
    assert parse_edge_list("3 1", directed=True).edges == ((3, 1, 1.0),)


@pytest.mark.parametrize(
    "text, kwargs, match",
    [
        ("0 0", {}, "line 1: self-loop"),
        ("0 1\n1 2\n2 2", {}, "line 3: self-loop"),
        ("0 1\n1 0", {}, "line 2: duplicate"),
        ("0 1\n0 1", {"directed": True}, "duplicate"),
        ("0 1 0", {"weighted": True}, "positive"),
        ("0 1 -2", {"weighted": True}, "positive"),
        ("0 1 2", {}, "weight column present"),
        ("0 1", {"weighted": True}, "missing weight"),
        ("0 x", {}, "not an integer"),
        ("-1 2", {}, "negative"),
        ("0 1 2 3", {}, "expected"),
        ("nodes 2\n0 5", {}, "smaller than the largest"),
    ],
)
def test_parse_errors(text, kwargs, match):
    with pytest.raises(InputError, match=match):
        parse_edge_list(text, **kwargs)


def test_directed_pair_both_directions_allowed():
    g = parse_edge_list("0 1\n1 0", directed=True)
    assert g.edge_count == 2


def test_graph_constructor_validates():
    with pytest.raises(InputError):
        Graph(2, ((1, 0, 1.0),))
    with pytest.raises(InputError):
        Graph(2, ((0, 1, 2.0),), weighted=False)
    with pytest.raises(InputError):
        Graph(2, ((0, 3, 1.0),))


def test_symmetrize_examples():
    g = symmetrize(Graph.from_edges(2, [(0, 1), (1, 0)], directed=True))
    assert g.edges == ((0, 1, 2.0),)
    g = symmetrize(Graph.from_edges(2, [(0, 1)], directed=True))
    assert g.edges == ((0, 1, 1.0),)
    g = symmetrize(Graph.from_edges(3, [(0, 1), (1, 2), (2, 0)], directed=True))
    assert g.edges == ((0, 1, 1.0), (0, 2, 1.0), (1, 2, 1.0))
    assert not g.directed


def test_symmetrize_rejects_undirected():
    with pytest.raises(InputError):
        symmetrize(parse_edge_list("0 1"))


@given(
    n=st.integers(0, 12),
    p=st.floats(0, 1),
    weighted=st.booleans(),
    directed=st.booleans(),
    seed=st.integers(0, 2**32 - 1),
)
def test_round_trip_and_invariants(n, p, weighted, directed, seed):
    g = random_graph(n, p, weighted=weighted, directed=directed, seed=seed)
    again = parse_edge_list(format_edge_list(g), directed=directed, weighted=weighted)
    assert again == g
    assert all(u < g.node_count and v < g.node_count for u, v, _ in g.edges)
    if directed:
        assert symmetrize(g).total_weight == pytest.approx(g.total_weight, rel=1e-12)
