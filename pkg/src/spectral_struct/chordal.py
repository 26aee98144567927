"""Chordal graph recognition and clique-tree machinery.

Maximum cardinality search (MCS) orders the vertices; its reverse is a
perfect elimination ordering exactly when the graph is chordal. The same
visit order yields the maximal cliques and a clique tree, whose edge
intersections are the minimal vertex separators.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .errors import HypothesisError
from .graph import Graph, is_connected


@dataclass(frozen=True)
class Separator:
    vertices: tuple[int, ...]
    multiplicity: int


@dataclass(frozen=True)
class TreeEdge:
    a: int
    b: int
    separator: tuple[int, ...]


@dataclass(frozen=True)
class CliqueStructure:
    """Maximal cliques, clique tree and separators of a connected chordal graph.

    ``vertex_separator_id[v]`` is the index into ``separators`` of the unique
    separator containing ``v`` (``None`` for vertices in no separator). It is
    only well defined when separators are pairwise disjoint; otherwise the
    whole field is ``None``.
    """

    n: int
    peo: tuple[int, ...]
    cliques: tuple[tuple[int, ...], ...]
    tree_edges: tuple[TreeEdge, ...]
    separators: tuple[Separator, ...]
    simplicial: tuple[bool, ...]
    vertex_separator_id: tuple[int | None, ...] | None

    @property
    def disjoint_separators(self) -> bool:
        return self.vertex_separator_id is not None

    def tree_neighbors(self) -> list[list[TreeEdge]]:
        out: list[list[TreeEdge]] = [[] for _ in self.cliques]
        for e in self.tree_edges:
            out[e.a].append(e)
            out[e.b].append(e)
        return out

    def simplicial_part(self, q: int) -> tuple[int, ...]:
        return tuple(v for v in self.cliques[q] if self.simplicial[v])


@dataclass(frozen=True)
class ChordalResult:
    chordal: bool
    structure: CliqueStructure | None = None
    witness: tuple[int, ...] | None = None

    def __iter__(self):
        # allows ``ok, cs = recognize_chordal(g)``
        yield self.chordal
        yield self.structure if self.chordal else self.witness


def mcs_order(g: Graph) -> list[int]:
    """Visit order of maximum cardinality search (ties: most recently bumped vertex)."""
    n = g.n
    adj = g.adjacency
    weight = [0] * n
    head = [-1] * (n + 1)
    nxt = [-1] * n
    prv = [-1] * n
    for v in range(n - 1, -1, -1):
        nxt[v] = head[0]
        if head[0] != -1:
            prv[head[0]] = v
        head[0] = v
    numbered = [False] * n
    order = []
    j = 0
    for _ in range(n):
        while j > 0 and head[j] == -1:
            j -= 1
        v = head[j]
        # unlink v
        head[j] = nxt[v]
        if nxt[v] != -1:
            prv[nxt[v]] = -1
        numbered[v] = True
        order.append(v)
        for w in adj[v]:
            if numbered[w]:
                continue
            wt = weight[w]
            p, q = prv[w], nxt[w]
            if p != -1:
                nxt[p] = q
            else:
                head[wt] = q
            if q != -1:
                prv[q] = p
            wt += 1
            weight[w] = wt
            prv[w] = -1
            nxt[w] = head[wt]
            if head[wt] != -1:
                prv[head[wt]] = w
            head[wt] = w
        j += 1
    return order


def _peo_violation(
    g: Graph, order: Sequence[int], pos: list[int], earlier: list[list[int]]
) -> tuple[int, int, int] | None:
    """First ``(x, p, w)`` showing the reversed visit order is no PEO, else ``None``.

    ``p`` is the most recently visited earlier neighbour of ``x``; every other
    earlier neighbour ``w`` must be adjacent to ``p``.
    """
    adj = g.adjacency
    tests: list[list[tuple[int, int]]] = [[] for _ in range(g.n)]
    for x in order:
        ex = earlier[x]
        if len(ex) < 2:
            continue
        p = max(ex, key=pos.__getitem__)
        for w in ex:
            if w != p:
                tests[p].append((x, w))
    mark = [-1] * g.n
    for p in order:
        if not tests[p]:
            continue
        for w in adj[p]:
            mark[w] = p
        for x, w in tests[p]:
            if mark[w] != p:
                return x, p, w
    return None


def _induced_path(g: Graph, src: int, dst: int, banned: set[int]) -> list[int] | None:
    parent = {src: src}
    queue = deque([src])
    while queue:
        u = queue.popleft()
        if u == dst:
            path = [u]
            while u != src:
                u = parent[u]
                path.append(u)
            return path[::-1]
        for w in g.adjacency[u]:
            if w not in parent and w not in banned:
                parent[w] = u
                queue.append(w)
    return None


def _cycle_through(g: Graph, x: int, a: int, b: int) -> list[int] | None:
    banned = {x, *g.adjacency[x]} - {a, b}
    path = _induced_path(g, a, b, banned)
    return None if path is None else [x, *path]


def chordless_cycle(g: Graph, hint: tuple[int, int, int] | None = None) -> tuple[int, ...] | None:
    """A chordless cycle of length >= 4, trying the vertex triple ``hint`` first."""
    if hint is not None:
        cyc = _cycle_through(g, *hint)
        if cyc is not None:
            return tuple(cyc)
    for x in range(g.n):
        nb = g.adjacency[x]
        for i, a in enumerate(nb):
            for b in nb[i + 1:]:
                if not g.has_edge(a, b):
                    cyc = _cycle_through(g, x, a, b)
                    if cyc is not None:
                        return tuple(cyc)
    return None


def recognize_chordal(g: Graph) -> ChordalResult:
    """Decide chordality of a connected graph.

    Returns ``ChordalResult(True, structure)`` or ``ChordalResult(False,
    witness=cycle)`` where ``cycle`` is a chordless cycle of length >= 4.
    """
    if not is_connected(g):
        raise HypothesisError("chordal recognition requires a connected graph")
    return _recognize(g)


def _recognize(g: Graph) -> ChordalResult:
    order = mcs_order(g)
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    adj = g.adjacency
    earlier = [[w for w in adj[x] if pos[w] < px] for x, px in enumerate(pos)]
    bad = _peo_violation(g, order, pos, earlier)
    if bad is not None:
        return ChordalResult(False, witness=chordless_cycle(g, bad))
    return ChordalResult(True, structure=_clique_structure(g, order, pos, earlier))


def _clique_structure(g: Graph, order: list[int], pos: list[int], madj: list[list[int]]) -> CliqueStructure:
    clique_of = [0] * g.n
    cliques: list[list[int]] = []
    raw_edges: list[tuple[int, int, tuple[int, ...]]] = []
    prev_card = 0
    for x in order:
        earlier = madj[x]
        card = len(earlier)
        if card <= prev_card or not cliques:
            cliques.append(list(earlier))
            if card:
                y = max(earlier, key=pos.__getitem__)
                raw_edges.append((clique_of[y], len(cliques) - 1, tuple(sorted(earlier))))
        s = len(cliques) - 1
        cliques[s].append(x)
        clique_of[x] = s
        prev_card = card

    count = [0] * g.n
    for q in cliques:
        for v in q:
            count[v] += 1
    simplicial = tuple(c == 1 for c in count)

    sep_index: dict[tuple[int, ...], int] = {}
    mult: list[int] = []
    for _, _, sep in raw_edges:
        i = sep_index.setdefault(sep, len(mult))
        if i == len(mult):
            mult.append(0)
        mult[i] += 1
    tree_edges = tuple(TreeEdge(a, b, sep) for a, b, sep in raw_edges)
    separators = tuple(Separator(sep, mult[i]) for sep, i in sep_index.items())

    owner: list[int | None] = [None] * g.n
    disjoint = True
    for i, s in enumerate(separators):
        for v in s.vertices:
            if owner[v] is not None:
                disjoint = False
                break
            owner[v] = i
        if not disjoint:
            break

    return CliqueStructure(
        n=g.n,
        peo=tuple(reversed(order)),
        cliques=tuple(tuple(sorted(q)) for q in cliques),
        tree_edges=tree_edges,
        separators=separators,
        simplicial=simplicial,
        vertex_separator_id=tuple(owner) if disjoint else None,
    )


def require_chordal(g: Graph) -> CliqueStructure:
    res = recognize_chordal(g)
    if not res.chordal:
        raise HypothesisError(f"graph is not chordal; chordless cycle {res.witness}")
    return res.structure


def minimal_vertex_separators(cs: CliqueStructure) -> list[Separator]:
    """Distinct clique-tree edge intersections with the number of tree edges realizing each."""
    return list(cs.separators)


def is_peo(g: Graph, peo: Sequence[int]) -> bool:
    """Direct check: the later neighbours of every vertex are pairwise adjacent."""
    pos = {v: i for i, v in enumerate(peo)}
    for v in peo:
        later = [w for w in g.adjacency[v] if pos[w] > pos[v]]
        for i, a in enumerate(later):
            for b in later[i + 1:]:
                if not g.has_edge(a, b):
                    return False
    return True


def boundary_cliques(cs: CliqueStructure) -> list[int]:
    """Ids of the boundary cliques.

    ``Q`` is a boundary clique when it has a simplicial vertex and some other
    maximal clique meets it in exactly its non-simplicial vertices. Any
    intersection ``Q & Q'`` lies inside every clique on the tree path between
    them, so it suffices to look at the tree neighbours of ``Q``.
    """
    nbrs = cs.tree_neighbors()
    out = []
    for q, members in enumerate(cs.cliques):
        simp = sum(1 for v in members if cs.simplicial[v])
        if simp == 0:
            continue
        nonsimp = len(members) - simp
        if any(len(e.separator) == nonsimp for e in nbrs[q]):
            out.append(q)
    return out
