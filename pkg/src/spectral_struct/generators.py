"""Seeded graph families and the labelled fixtures used throughout the tests.

All randomness comes from :class:`~spectral_struct.rng.SplitMix64`, so a
seed fixes the output edge list exactly.
"""

from __future__ import annotations

import math
import re

from .graph import Graph
from .rng import SplitMix64

# Labelled edge lists transcribed from the figures.
FIG1_EDGES = """
a b  c d  e f  f a
g d  g e  i d  i e  h d  h e
j b  j c  j k  j l  k b  k c  k l  l b  l c
"""
FIG3_EDGES = """
a b  a c  b c  b e  b d  b f  c d  c e  c f  d e
d f  d k  d g  d h  e g  e f  e k  e h  k g  k h
k i  g i  g h  h i  j d  j e  j h  j g  j k
"""
FIG4_EDGES = """
a b  b c  c d
d e  d f  d g  d h  d i  d j  d k  d l  d m
e f  g h  i j  k l  l m  k m
"""
# gem: a path b-c-d-e plus a vertex a adjacent to all of it
GEM_EDGES = "c d  c b  c a  d a  d e  b a  e a"
# dart: diamond on k, l, n, j (n, j non-adjacent) plus pendant m at l
DART_EDGES = "n k  n l  k l  l m  k j  l j"


def _from_pairs(text: str) -> Graph:
    toks = text.split()
    pairs = list(zip(toks[::2], toks[1::2]))
    labels = sorted({t for p in pairs for t in p})
    index = {x: i for i, x in enumerate(labels)}
    return Graph.from_edges(len(labels), [(index[a], index[b]) for a, b in pairs], labels)


def complete(n: int) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def star(leaves: int) -> Graph:
    """``K_{1,leaves}`` with centre 0."""
    return Graph.from_edges(leaves + 1, [(0, v) for v in range(1, leaves + 1)])


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(v, v + 1) for v in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(v, (v + 1) % n) for v in range(n)])


_NAMED = {
    "fig1": FIG1_EDGES,
    "fig3": FIG3_EDGES,
    "fig4": FIG4_EDGES,
    "gem": GEM_EDGES,
    "dart": DART_EDGES,
}
_SIZED = {"k": complete, "star": star, "path": path, "cycle": cycle}
_SIZED_RE = re.compile(r"^(k|star|path|cycle)\(?(\d+)\)?$")

FIXTURE_NAMES = (*_NAMED, "k(n)", "star(n)", "path(n)", "cycle(n)")


def fixture(name: str) -> Graph:
    """Named graph: ``fig1``, ``fig3``, ``fig4``, ``gem``, ``dart``, or ``k5`` / ``star(3)`` / ``path4`` / ``cycle6``."""
    key = name.strip().lower()
    if key in _NAMED:
        return _from_pairs(_NAMED[key])
    m = _SIZED_RE.match(key)
    if m:
        return _SIZED[m.group(1)](int(m.group(2)))
    raise KeyError(f"unknown fixture {name!r}; known: {', '.join(FIXTURE_NAMES)}")


# -- random families ------------------------------------------------------


def _block_edges(rng: SplitMix64, blocks: int, max_block_size: int) -> tuple[int, list[tuple[int, int]]]:
    s = rng.randint(2, max_block_size)
    n = s
    edges = [(u, v) for u in range(s) for v in range(u + 1, s)]
    for _ in range(blocks - 1):
        cut = rng.below(n)
        s = rng.randint(2, max_block_size)
        members = [cut, *range(n, n + s - 1)]
        n += s - 1
        edges.extend((members[i], members[j]) for i in range(s) for j in range(i + 1, s))
    return n, edges


def gen_block_graph(seed: int, blocks: int, max_block_size: int) -> Graph:
    """Connected block graph: ``blocks`` cliques of random size in ``[2, max_block_size]``,
    each attached to the graph so far at a uniformly chosen vertex."""
    if blocks < 1 or max_block_size < 2:
        raise ValueError("need blocks >= 1 and max_block_size >= 2")
    n, edges = _block_edges(SplitMix64(seed), blocks, max_block_size)
    return Graph.from_edges(n, edges)


def expand_true_twins(g: Graph, seed: int, max_copies: int) -> Graph:
    """Give every vertex ``0..max_copies`` (uniform) new true twins.

    The copies of ``v`` form a clique with ``v`` and are joined to every
    original and copy of each neighbour of ``v``.
    """
    if max_copies < 0:
        raise ValueError("max_copies must be non-negative")
    if max_copies == 0:
        return g
    rng = SplitMix64(seed)
    group: list[list[int]] = []
    labels = list(g.labels)
    for v in range(g.n):
        k = rng.randint(0, max_copies)
        ids = [v]
        for i in range(1, k + 1):
            ids.append(len(labels))
            labels.append(f"{g.labels[v]}.{i}")
        group.append(ids)
    edges = []
    for ids in group:
        edges.extend((ids[i], ids[j]) for i in range(len(ids)) for j in range(i + 1, len(ids)))
    for u, v in g.edges():
        edges.extend((a, b) for a in group[u] for b in group[v])
    return Graph.from_edges(len(labels), edges, labels)


def gen_strictly_chordal(seed: int, n: int, max_block_size: int = 4, max_copies: int = 1) -> Graph:
    """Strictly chordal graph with roughly ``n`` vertices (block graph, then true twins)."""
    rng = SplitMix64(seed)
    per_block = (max_block_size + 2) / 2 - 1
    growth = 1 + max_copies / 2
    blocks = max(1, round(n / growth / per_block))
    bn, edges = _block_edges(rng, blocks, max_block_size)
    return expand_true_twins(Graph.from_edges(bn, edges), rng.next_u64(), max_copies)


def gen_chordal(seed: int, n: int) -> Graph:
    """Connected chordal graph built by repeatedly adding a vertex adjacent to a
    random non-empty subset of a previously created clique."""
    rng = SplitMix64(seed)
    cliques: list[tuple[int, ...]] = [(0,)]
    edges = []
    for v in range(1, n):
        base = cliques[rng.below(len(cliques))]
        nbrs = tuple(u for u in base if rng.below(2))
        if not nbrs:
            nbrs = (base[rng.below(len(base))],)
        edges.extend((u, v) for u in nbrs)
        cliques.append(nbrs + (v,))
    return Graph.from_edges(n, edges)


def _gnp_pairs(rng: SplitMix64, n: int, p: float) -> list[tuple[int, int]]:
    """Edges of ``G(n, p)`` by geometric skipping over the pairs, ``O(n + m)``."""
    if p <= 0:
        return []
    if p >= 1:
        return [(u, v) for v in range(n) for u in range(v)]
    log_q = math.log1p(-p)
    edges = []
    v, w = 1, -1
    while v < n:
        w += 1 + int(math.log1p(-rng.random()) / log_q)
        while w >= v and v < n:
            w -= v
            v += 1
        if v < n:
            edges.append((w, v))
    return edges


def gen_gnp(seed: int, n: int, p: float) -> Graph:
    """Erdos-Renyi ``G(n, p)``."""
    return Graph.from_edges(n, _gnp_pairs(SplitMix64(seed), n, p))


def gen_connected_gnp(seed: int, n: int, p: float) -> Graph:
    """``G(n, p)`` plus a random spanning tree, so the result is connected."""
    rng = SplitMix64(seed)
    edges = set(_gnp_pairs(rng, n, p))
    for v in range(1, n):
        edges.add((rng.below(v), v))
    return Graph.from_edges(n, sorted(edges))
