from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spectral_struct import Graph, degree, fixture, is_connected, parse_edge_list, to_edge_list
from spectral_struct.errors import ParseError
from spectral_struct.generators import complete, path
from spectral_struct.graph import components, induced_subgraph, is_complete


@st.composite
def graphs(draw, max_n=12):
    n = draw(st.integers(0, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, chosen)


def test_parse_path():
    g = parse_edge_list("a b\nb c")
    assert (g.n, g.m) == (3, 2)
    assert g.labels == ("a", "b", "c")
    assert g.adjacency == ((1,), (0, 2), (1,))


def test_parse_fig1_lines():
    edges = [(g.labels[u], g.labels[v]) for g in [fixture("fig1")] for u, v in g.edges()]
    text = "\n".join(f"{a} {b}" for a, b in edges)
    g = parse_edge_list(text)
    assert (g.n, g.m) == (12, 19)


def test_self_loop_rejected_with_line_number():
    with pytest.raises(ParseError) as exc:
        parse_edge_list("a b\n\na a\n")
    assert exc.value.lineno == 3
    assert "self-loop" in str(exc.value)


def test_duplicate_edge_rejected():
    with pytest.raises(ParseError) as exc:
        parse_edge_list("a b\nb a\n")
    assert exc.value.lineno == 2


@pytest.mark.parametrize("text", ["a b c", "a", "a $", "a b\n!! x"])
def test_garbage_rejected(text):
    with pytest.raises(ParseError):
        parse_edge_list(text)


def test_comments_and_blank_lines():
    g = parse_edge_list("# header comment\n\na b  # trailing\n   \nb c\n")
    assert (g.n, g.m) == (3, 2)


def test_header_allows_isolated_vertices():
    g = parse_edge_list("4 1\na b\n")
    assert (g.n, g.m) == (4, 1)
    assert g.labels[:2] == ("a", "b")
    assert not is_connected(g)


def test_numeric_first_line_that_is_not_a_header():
    # m = 2 does not match the single remaining line, so "1 2" is an edge
    g = parse_edge_list("1 2\n2 3\n")
    assert (g.n, g.m) == (3, 2)


def test_header_labels_do_not_collide():
    g = parse_edge_list("3 1\n2 0\n")
    assert g.n == 3 and len(set(g.labels)) == 3


def test_degree():
    assert all(degree(complete(4), v) == 3 for v in range(4))
    g1 = fixture("fig1")
    assert degree(g1, g1.vertex("g")) == 2
    g3 = fixture("fig3")
    d = g3.vertex("d")
    assert degree(g3, d) == 8
    assert sorted(g3.names(g3.adjacency[d])) == list("bcefghjk")
    with pytest.raises(IndexError):
        degree(g3, 11)


def test_is_connected():
    assert is_connected(path(3))
    two_triangles = Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    assert not is_connected(two_triangles)
    assert len(components(two_triangles)) == 2
    assert is_connected(fixture("fig4"))
    assert is_connected(Graph.from_edges(0, []))


def test_from_edges_validation():
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(0, 2)])
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(1, 1)])
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(0, 1), (1, 0)])
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(0, 1)], labels=["x", "x"])


def test_induced_subgraph_and_complete():
    g = fixture("fig4")
    sub = induced_subgraph(g, g.vertices("dklm"))
    assert is_complete(sub) and sub.labels == ("d", "k", "l", "m")


@given(graphs())
def test_graph_invariants(g):
    assert sum(degree(g, v) for v in range(g.n)) == 2 * g.m
    for v, nb in enumerate(g.adjacency):
        assert list(nb) == sorted(set(nb)) and v not in nb
        assert all(v in g.adjacency[w] for w in nb)
    assert g.indptr[-1] == 2 * g.m
    assert [tuple(g.indices[g.indptr[v]:g.indptr[v + 1]]) for v in range(g.n)] == list(g.adjacency)


@settings(max_examples=60)
@given(graphs())
def test_round_trip(g):
    text = to_edge_list(g)
    again = parse_edge_list(text)
    assert again.labeled_edge_set() == g.labeled_edge_set()
    assert again.n == g.n
    # isolated vertices exist only through the header count, not by name
    named = {g.labels[v] for v in range(g.n) if g.adjacency[v]}
    assert named == {again.labels[v] for v in range(again.n) if again.adjacency[v]}


def test_writer_sorts_by_vertex_id():
    g = parse_edge_list("b c\nc a\na b\n")  # ids: b=0, c=1, a=2
    assert to_edge_list(g).splitlines() == ["3 3", "b c", "b a", "c a"]
