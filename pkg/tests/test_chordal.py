from __future__ import annotations

from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bruteforce import maximal_cliques, minimal_uv_separators
from spectral_struct import (
    boundary_cliques,
    fixture,
    gen_chordal,
    gen_strictly_chordal,
    minimal_vertex_separators,
    recognize_chordal,
)
from spectral_struct.chordal import chordless_cycle, is_peo, mcs_order, require_chordal
from spectral_struct.errors import HypothesisError
from spectral_struct.generators import gen_connected_gnp
from spectral_struct.graph import Graph


def _sets(g, groups):
    return sorted("".join(g.names(x)) for x in groups)


def _assert_chordless_cycle(g, cyc):
    k = len(cyc)
    assert k >= 4 and len(set(cyc)) == k
    for i, j in combinations(range(k), 2):
        consecutive = j == i + 1 or (i == 0 and j == k - 1)
        assert g.has_edge(cyc[i], cyc[j]) == consecutive


def test_c4_not_chordal():
    g = fixture("cycle(4)")
    ok, witness = recognize_chordal(g)
    assert not ok
    _assert_chordless_cycle(g, witness)


def test_long_cycle_witness():
    g = fixture("cycle(7)")
    res = recognize_chordal(g)
    assert not res.chordal and res.structure is None
    _assert_chordless_cycle(g, res.witness)
    assert len(res.witness) == 7


def test_fig1_witness():
    g = fixture("fig1")
    res = recognize_chordal(g)
    assert not res.chordal
    _assert_chordless_cycle(g, res.witness)


def test_gem_cliques():
    g = fixture("gem")
    ok, cs = recognize_chordal(g)
    assert ok
    assert len(cs.cliques) == 3
    assert {frozenset(q) for q in cs.cliques} == maximal_cliques(g)


def test_fig4_cliques_and_separators():
    g = fixture("fig4")
    ok, cs = recognize_chordal(g)
    assert ok
    assert _sets(g, cs.cliques) == sorted(["ab", "bc", "cd", "def", "dgh", "dij", "dklm"])
    seps = {"".join(g.names(s.vertices)): s.multiplicity for s in minimal_vertex_separators(cs)}
    assert seps == {"b": 1, "c": 1, "d": 4}


def test_fig3_separators():
    g = fixture("fig3")
    cs = require_chordal(g)
    assert _sets(g, [s.vertices for s in minimal_vertex_separators(cs)]) == ["bc", "de", "ghk"]


def test_complete_graph_has_no_separators():
    cs = require_chordal(fixture("k5"))
    assert minimal_vertex_separators(cs) == []
    assert boundary_cliques(cs) == []
    assert len(cs.cliques) == 1 and cs.tree_edges == ()


def test_boundary_cliques():
    g = fixture("fig4")
    cs = require_chordal(g)
    assert _sets(g, [cs.cliques[q] for q in boundary_cliques(cs)]) == sorted(["ab", "def", "dgh", "dij", "dklm"])
    p3 = fixture("path(3)")
    cs = require_chordal(p3)
    assert len(boundary_cliques(cs)) == 2


def test_require_chordal_raises():
    with pytest.raises(HypothesisError):
        require_chordal(fixture("cycle(5)"))


def test_disconnected_rejected():
    with pytest.raises(HypothesisError):
        recognize_chordal(Graph.from_edges(3, [(0, 1)]))


def test_mcs_visits_every_vertex_once():
    g = fixture("fig3")
    order = mcs_order(g)
    assert sorted(order) == list(range(g.n))


def _check_structure(g, cs):
    # PEO
    assert is_peo(g, cs.peo)
    # cliques: maximal, non-nested, cover V, count <= n
    cliques = [frozenset(q) for q in cs.cliques]
    assert set(cliques) == maximal_cliques(g)
    assert len(cliques) <= g.n
    # spanning clique tree with the induced-subtree property
    k = len(cliques)
    assert len(cs.tree_edges) == k - 1
    adj = {i: set() for i in range(k)}
    for e in cs.tree_edges:
        adj[e.a].add(e.b)
        adj[e.b].add(e.a)
        assert frozenset(e.separator) == cliques[e.a] & cliques[e.b]
    for v in range(g.n):
        holders = {i for i in range(k) if v in cliques[i]}
        start = next(iter(holders))
        seen, stack = {start}, [start]
        while stack:
            i = stack.pop()
            for j in adj[i] & holders:
                if j not in seen:
                    seen.add(j)
                    stack.append(j)
        assert seen == holders
    # separators are cliques; multiplicities count tree edges
    for s in cs.separators:
        assert all(g.has_edge(a, b) for a, b in combinations(s.vertices, 2))
        assert s.multiplicity == sum(1 for e in cs.tree_edges if e.separator == s.vertices)
    # simplicial <=> neighbourhood is a clique <=> in exactly one maximal clique
    for v in range(g.n):
        nb = g.adjacency[v]
        is_clique = all(g.has_edge(a, b) for a, b in combinations(nb, 2))
        in_one = sum(v in q for q in cliques) == 1
        assert cs.simplicial[v] == is_clique == in_one


@pytest.mark.parametrize("seed", range(40))
def test_structure_on_random_chordal(seed):
    g = gen_chordal(seed, 2 + seed % 11)
    ok, cs = recognize_chordal(g)
    assert ok
    _check_structure(g, cs)
    assert {frozenset(s.vertices) for s in cs.separators} == minimal_uv_separators(g)


@pytest.mark.parametrize("seed", range(10))
def test_structure_on_strictly_chordal(seed):
    g = gen_strictly_chordal(seed, 9, max_copies=1)
    ok, cs = recognize_chordal(g)
    assert ok
    _check_structure(g, cs)


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 10_000), st.integers(4, 14), st.sampled_from([0.2, 0.4, 0.7]))
def test_recognition_agrees_with_cycle_search(seed, n, p):
    g = gen_connected_gnp(seed, n, p)
    res = recognize_chordal(g)
    if res.chordal:
        assert chordless_cycle(g) is None
        assert is_peo(g, res.structure.peo)
    else:
        _assert_chordless_cycle(g, res.witness)
