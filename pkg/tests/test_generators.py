from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spectral_struct import (
    expand_true_twins,
    fixture,
    gen_block_graph,
    gen_chordal,
    gen_strictly_chordal,
    is_connected,
    recognize_chordal,
)
from spectral_struct.generators import FIXTURE_NAMES, complete, cycle, gen_connected_gnp, gen_gnp, path, star
from spectral_struct.graph import is_complete


@pytest.mark.parametrize(
    "make",
    [
        lambda s: gen_block_graph(s, 6, 4),
        lambda s: gen_strictly_chordal(s, 30, max_copies=2),
        lambda s: gen_chordal(s, 20),
        lambda s: gen_gnp(s, 20, 0.3),
        lambda s: gen_connected_gnp(s, 20, 0.1),
    ],
)
def test_deterministic(make):
    assert make(11) == make(11)
    assert any(make(11) != make(s) for s in range(12, 20))


def test_single_block_is_small_clique():
    for seed in range(20):
        g = gen_block_graph(seed, 1, 3)
        assert is_complete(g) and 2 <= g.n <= 3


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 15), st.integers(2, 6))
def test_block_graphs(seed, blocks, size):
    g = gen_block_graph(seed, blocks, size)
    assert is_connected(g)
    ok, cs = recognize_chordal(g)
    # chordal with every separator a cut vertex: biconnected components are cliques
    assert ok and all(len(s.vertices) == 1 for s in cs.separators)
    assert len(cs.cliques) == blocks
    assert all(2 <= len(q) <= size for q in cs.cliques)


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 10**6), st.integers(2, 40), st.integers(2, 5), st.integers(0, 3))
def test_strictly_chordal_output(seed, n, size, copies):
    g = gen_strictly_chordal(seed, n, max_block_size=size, max_copies=copies)
    ok, cs = recognize_chordal(g)
    assert ok and cs.disjoint_separators


def test_expand_true_twins():
    g = fixture("fig4")
    assert expand_true_twins(g, 3, 0) is g
    k3 = expand_true_twins(complete(1), 1, 2)
    assert is_complete(k3) and k3.n == 3
    with pytest.raises(ValueError):
        expand_true_twins(g, 0, -1)


def test_copies_are_true_twins_of_their_origin():
    g = expand_true_twins(path(5), 4, 3)
    closed = [set(nb) | {v} for v, nb in enumerate(g.adjacency)]
    for v, label in enumerate(g.labels):
        if "." in label:
            origin = g.vertex(label.split(".")[0])
            assert closed[v] == closed[origin]


def test_gen_chordal_is_chordal():
    for seed in range(50):
        g = gen_chordal(seed, 1 + seed % 25)
        assert is_connected(g) and recognize_chordal(g).chordal


def test_connected_gnp():
    for seed in range(20):
        assert is_connected(gen_connected_gnp(seed, 30, 0.02))
    assert gen_gnp(1, 6, 0).m == 0
    assert gen_gnp(1, 6, 1) == complete(6)


def test_gnp_edge_density():
    g = gen_gnp(7, 400, 0.05)
    expected = 0.05 * 400 * 399 / 2
    assert abs(g.m - expected) < 0.1 * expected


def test_fixture_sizes():
    assert (fixture("fig1").n, fixture("fig1").m) == (12, 19)
    assert (fixture("fig3").n, fixture("fig3").m) == (11, 29)
    assert (fixture("fig4").n, fixture("fig4").m) == (13, 18)
    assert (fixture("gem").n, fixture("gem").m) == (5, 7)
    assert (fixture("dart").n, fixture("dart").m) == (5, 6)
    for name in ("gem", "dart"):
        ok, cs = recognize_chordal(fixture(name))
        assert ok and not cs.disjoint_separators


def test_parametric_fixtures():
    assert fixture("k5") == complete(5)
    assert fixture("star(3)") == star(3)
    assert fixture("path(6)") == path(6)
    assert fixture("cycle(4)") == cycle(4)
    assert set(FIXTURE_NAMES) >= {"fig1", "fig3", "fig4", "gem", "dart"}
    with pytest.raises(KeyError):
        fixture("cycle")
    with pytest.raises(KeyError):
        fixture("nope")
