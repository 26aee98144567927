"""Clusters ``(F, S)`` of false twins and the spectral effect of overlaying graphs on them.

For a cluster with ``|F| = k`` and common neighbourhood ``S`` with
``|S| = l``, any vector supported on ``F`` and summing to zero is mapped by
``L(G)`` to ``l`` times itself. Adding the edges of a graph ``H`` on ``F``
turns those eigenvalues into ``l + mu`` for the ``k - 1`` Laplacian
eigenvalues ``mu`` of ``H`` not paired with the all-ones vector.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from ..errors import HypothesisError
from ..graph import Graph
from ..twins import twin_partition
from .spectrum import INTEGER_MATCH_TOL, integer_multiplicity, laplacian, numeric_spectrum


@dataclass(frozen=True)
class Cluster:
    F: tuple[int, ...]
    S: tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.F)

    @property
    def ell(self) -> int:
        return len(self.S)


def is_cluster(g: Graph, c: Cluster) -> bool:
    return len(c.F) >= 2 and all(g.adjacency[v] == c.S for v in c.F)


def find_clusters(g: Graph) -> list[Cluster]:
    """A maximal pairwise-disjoint selection of clusters from the false-twin classes.

    Candidates are taken largest ``|F|`` first, ties by smallest vertex id;
    a candidate is kept when neither its ``F`` nor its ``S`` meets those of
    the clusters kept so far.
    """
    cands = [Cluster(c.vertices, g.adjacency[c.vertices[0]]) for c in twin_partition(g).false_classes]
    cands.sort(key=lambda c: (-c.k, c.F[0]))
    used_f: set[int] = set()
    used_s: set[int] = set()
    out = []
    for c in cands:
        if used_f.isdisjoint(c.F) and used_s.isdisjoint(c.S):
            out.append(c)
            used_f.update(c.F)
            used_s.update(c.S)
    return out


def _check_disjoint(assignments: Sequence[tuple[Cluster, Graph]]) -> None:
    used_f: set[int] = set()
    used_s: set[int] = set()
    for c, h in assignments:
        if h.n != c.k:
            raise ValueError(f"overlay graph has {h.n} vertices, cluster has {c.k}")
        if not (used_f.isdisjoint(c.F) and used_s.isdisjoint(c.S)):
            raise HypothesisError("clusters must be pairwise disjoint")
        used_f.update(c.F)
        used_s.update(c.S)


def overlay_cluster_graphs(g: Graph, assignments: Sequence[tuple[Cluster, Graph]]) -> Graph:
    """``G(H_1, ..., H_t)``: vertex ``i`` of ``H_j`` is identified with the ``i``-th smallest id of ``F_j``."""
    _check_disjoint(assignments)
    edges = set(g.edges())
    for c, h in assignments:
        f = sorted(c.F)
        for a, b in h.edges():
            u, v = f[a], f[b]
            edges.add((min(u, v), max(u, v)))
    return Graph.from_edges(g.n, sorted(edges), g.labels)


@dataclass(frozen=True)
class PredictedRoot:
    lam: float
    predicted: int
    observed: int
    method: str  # "exact" or "numeric"

    @property
    def ok(self) -> bool:
        return self.observed >= self.predicted


@dataclass(frozen=True)
class FactorizationCheck:
    ok: bool
    roots: tuple[PredictedRoot, ...]
    residual_degree: int  # degree of the unfactored part of the characteristic polynomial


def verify_cluster_factorization(
    g: Graph,
    assignments: Sequence[tuple[Cluster, Graph]],
    tol: float = INTEGER_MATCH_TOL,
) -> FactorizationCheck:
    """Check that ``Spec L(G(H_1..H_t))`` contains ``l_j + mu_i(H_j)`` for ``i < k_j``.

    With an empty ``H_j`` this is ``l_j`` with multiplicity ``k_j - 1``.
    Integer roots are counted exactly; the others by numeric eigenvalues
    within ``tol``.
    """
    for c, _ in assignments:
        if not is_cluster(g, c):
            raise HypothesisError(f"{c} is not a cluster of the graph")
    overlay = overlay_cluster_graphs(g, assignments)

    exact_pred: dict[int, int] = defaultdict(int)
    numeric_pred: list[float] = []
    for c, h in assignments:
        lh = laplacian(h)
        image = lh.array() @ np.ones(h.n)
        if not np.allclose(image, image[0]):
            raise HypothesisError("L(H) does not map the all-ones vector to a multiple of itself")
        # drop the eigenvalue paired with the all-ones vector (0 for a Laplacian)
        mus = numeric_spectrum(lh)[1:]
        for mu in mus:
            r = round(mu)
            if abs(mu - r) <= tol:
                exact_pred[c.ell + r] += 1
            else:
                numeric_pred.append(c.ell + mu)

    roots = []
    lo = laplacian(overlay)
    for lam, k in sorted(exact_pred.items()):
        roots.append(PredictedRoot(lam, k, integer_multiplicity(lo, lam), "exact"))
    if numeric_pred:
        spec = numeric_spectrum(lo)
        numeric_pred.sort()
        i = 0
        while i < len(numeric_pred):
            lam = numeric_pred[i]
            j = i
            while j < len(numeric_pred) and abs(numeric_pred[j] - lam) <= tol:
                j += 1
            seen = sum(1 for x in spec if abs(x - lam) <= tol)
            roots.append(PredictedRoot(lam, j - i, seen, "numeric"))
            i = j
    residual_degree = g.n - sum(c.k for c, _ in assignments) + len(assignments)
    return FactorizationCheck(all(r.ok for r in roots), tuple(roots), residual_degree)
