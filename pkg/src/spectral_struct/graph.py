"""Immutable simple undirected graphs, edge-list I/O and elementary queries."""

from __future__ import annotations

import re
from bisect import bisect_left
from collections import deque
from dataclasses import dataclass, field
from itertools import chain
from pathlib import Path
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import ParseError

_TOKEN = re.compile(r"^[A-Za-z0-9_.:+\-]+$")
_UINT = re.compile(r"^[0-9]+$")


@dataclass(frozen=True, eq=False)
class Graph:
    """Simple undirected graph on vertex ids ``0..n-1``.

    ``adjacency[v]`` is the strictly increasing tuple of neighbours of ``v``.
    ``labels[v]`` is the display name used by the edge-list format and reports.
    ``indptr``/``indices`` hold the same adjacency as read-only int32 CSR
    arrays for the vectorised stages. Build instances with :meth:`from_edges` or :func:`parse_edge_list`; the
    constructor trusts its arguments.
    """

    n: int
    adjacency: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...]
    m: int = field(init=False)
    indptr: np.ndarray = field(init=False, repr=False)
    indices: np.ndarray = field(init=False, repr=False)

    def __post_init__(self) -> None:
        adj = self.adjacency
        indptr = np.zeros(self.n + 1, dtype=np.int32)
        np.cumsum(np.fromiter(map(len, adj), dtype=np.int32, count=self.n), out=indptr[1:])
        indices = np.fromiter(chain.from_iterable(adj), dtype=np.int32, count=int(indptr[-1]))
        indptr.setflags(write=False)
        indices.setflags(write=False)
        object.__setattr__(self, "m", int(indptr[-1]) // 2)
        object.__setattr__(self, "indptr", indptr)
        object.__setattr__(self, "indices", indices)

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[tuple[int, int]],
        labels: Sequence[str] | None = None,
    ) -> "Graph":
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u].append(v)
            adj[v].append(u)
        frozen = []
        for v, nb in enumerate(adj):
            nb.sort()
            for i in range(1, len(nb)):
                if nb[i] == nb[i - 1]:
                    raise ValueError(f"duplicate edge ({v}, {nb[i]})")
            frozen.append(tuple(nb))
        if labels is None:
            labels = [str(i) for i in range(n)]
        elif len(labels) != n:
            raise ValueError("labels must have one entry per vertex")
        if len(set(labels)) != n:
            raise ValueError("labels must be distinct")
        return cls(n, tuple(frozen), tuple(labels))

    # -- queries ---------------------------------------------------------

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        a = self.adjacency[u]
        i = bisect_left(a, v)
        return i < len(a) and a[i] == v

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, in lexicographic order."""
        for u, nb in enumerate(self.adjacency):
            for v in nb:
                if v > u:
                    yield u, v

    def vertex(self, label: str) -> int:
        try:
            return self._label_index[label]
        except KeyError:
            raise KeyError(f"no vertex labelled {label!r}") from None

    def vertices(self, labels: Iterable[str]) -> list[int]:
        return [self.vertex(x) for x in labels]

    def names(self, vertices: Iterable[int]) -> list[str]:
        return [self.labels[v] for v in vertices]

    @property
    def _label_index(self) -> dict[str, int]:
        cache = self.__dict__.get("_label_cache")
        if cache is None:
            cache = {x: i for i, x in enumerate(self.labels)}
            object.__setattr__(self, "_label_cache", cache)
        return cache

    def labeled_edge_set(self) -> frozenset[frozenset[str]]:
        lab = self.labels
        return frozenset(frozenset((lab[u], lab[v])) for u, v in self.edges())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.n == other.n
            and self.adjacency == other.adjacency
            and self.labels == other.labels
        )

    def __hash__(self) -> int:
        return hash((self.n, self.adjacency))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def degree(g: Graph, v: int) -> int:
    if not 0 <= v < g.n:
        raise IndexError(f"vertex id {v} out of range for n={g.n}")
    return len(g.adjacency[v])


def components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        out.append(comp)
    return out


def is_connected(g: Graph) -> bool:
    """True iff ``g`` has at most one connected component (the empty graph counts)."""
    return g.n == 0 or len(components(g)[0]) == g.n


def is_complete(g: Graph) -> bool:
    return g.m == g.n * (g.n - 1) // 2


def induced_subgraph(g: Graph, vertices: Sequence[int]) -> Graph:
    """Subgraph induced by ``vertices``; new ids follow the given order."""
    index = {v: i for i, v in enumerate(vertices)}
    edges = [
        (index[u], index[w])
        for u in vertices
        for w in g.adjacency[u]
        if w in index and u < w
    ]
    return Graph.from_edges(len(vertices), edges, [g.labels[v] for v in vertices])


# -- edge-list text format ----------------------------------------------------


def _content_lines(text: str) -> list[tuple[int, list[str]]]:
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append((lineno, line.split()))
    return rows


def parse_edge_list(text: str) -> Graph:
    """Parse line-oriented ``u v`` edge text.

    ``#`` starts a comment. Vertex labels are arbitrary tokens and get dense
    ids in order of first appearance. The first content line is read as an
    ``n m`` header when both fields are non-negative integers, ``m`` equals
    the number of following edge lines and ``n`` is at least the number of
    distinct labels in them; header-declared vertices that never appear in an
    edge become isolated vertices with generated labels.
    """
    rows = _content_lines(text)
    for lineno, toks in rows:
        if len(toks) != 2:
            raise ParseError(lineno, f"expected 'u v', got {len(toks)} field(s)")
        for t in toks:
            if not _TOKEN.match(t):
                raise ParseError(lineno, f"invalid vertex token {t!r}")

    declared_n = None
    if rows and all(_UINT.match(t) for t in rows[0][1]):
        hn, hm = (int(t) for t in rows[0][1])
        body = rows[1:]
        if hm == len(body) and hn >= len({t for _, toks in body for t in toks}):
            declared_n = hn
            rows = body

    index: dict[str, int] = {}
    labels: list[str] = []
    seen: set[tuple[int, int]] = set()
    edges: list[tuple[int, int]] = []
    for lineno, (a, b) in rows:
        if a == b:
            raise ParseError(lineno, f"self-loop on {a!r}")
        ids = []
        for t in (a, b):
            if t not in index:
                index[t] = len(labels)
                labels.append(t)
            ids.append(index[t])
        key = (min(ids), max(ids))
        if key in seen:
            raise ParseError(lineno, f"duplicate edge {a} {b}")
        seen.add(key)
        edges.append(key)

    if declared_n is not None:
        i = 0
        while len(labels) < declared_n:
            name = str(i)
            i += 1
            while name in index:
                name = "_" + name
            index[name] = len(labels)
            labels.append(name)
    return Graph.from_edges(len(labels), edges, labels)


def read_edge_list(path: str | Path) -> Graph:
    return parse_edge_list(Path(path).read_text(encoding="utf-8"))


def to_edge_list(g: Graph, header: bool = True) -> str:
    """Serialize as an ``n m`` header plus one ``u v`` line per edge, sorted by id."""
    lab = g.labels
    lines = [f"{g.n} {g.m}"] if header else []
    lines.extend(f"{lab[u]} {lab[v]}" for u, v in g.edges())
    return "\n".join(lines) + "\n"
