"""Strictly chordal graphs and their structurally certified integer eigenvalues.

A connected chordal graph is strictly chordal when its minimal vertex
separators are pairwise disjoint. Then every vertex is either simplicial or
lies in exactly one separator, every boundary clique ``Q`` splits as its
separator ``S`` plus its simplicial vertices ``P``, and the families
``B(S)`` of boundary cliques sharing a separator give eigenvalues in closed
form.
"""

from __future__ import annotations

from dataclasses import dataclass

from .chordal import CliqueStructure, _recognize, boundary_cliques
from .errors import HypothesisError
from .graph import Graph, is_connected
from .structural import Entry, Provenance, StructuralSpectrum, make_spectrum, merge_entries
from .twins import TwinPartition, twin_entries, twin_partition


@dataclass(frozen=True)
class FamilyClique:
    clique_id: int
    size: int
    simplicial: tuple[int, ...]


@dataclass(frozen=True)
class BoundaryFamily:
    """Boundary cliques ``B(S)`` containing one separator ``S``."""

    separator_id: int
    separator: tuple[int, ...]
    cliques: tuple[FamilyClique, ...]
    pooled_simplicials: tuple[int, ...]
    false_twin_subset: tuple[int, ...]

    @property
    def b(self) -> int:
        return len(self.cliques)

    @property
    def in_s_star(self) -> bool:
        return self.b > 1


def recognize_strictly_chordal(g: Graph, cs: CliqueStructure) -> bool:
    """True iff the minimal vertex separators of chordal ``g`` are pairwise disjoint."""
    if cs is None or cs.n != g.n:
        raise HypothesisError("strictly chordal recognition needs the clique structure of g")
    return cs.disjoint_separators


def _require_strict(cs: CliqueStructure) -> tuple[int | None, ...]:
    if not cs.disjoint_separators:
        raise HypothesisError("minimal vertex separators are not pairwise disjoint")
    return cs.vertex_separator_id


def separator_eigenvalues(g: Graph, cs: CliqueStructure) -> StructuralSpectrum:
    """``d(v) + 1`` with multiplicity ``|S| - 1`` for each separator ``S`` with ``|S| >= 2``.

    Separator vertices are pairwise true twins in a strictly chordal graph, so
    any ``v`` in ``S`` gives the same degree.
    """
    if not is_connected(g):
        raise HypothesisError("separator eigenvalues require a connected graph")
    return make_spectrum(_separator_entries(g, cs))


def _separator_entries(g: Graph, cs: CliqueStructure) -> list[Entry]:
    _require_strict(cs)
    return [
        Entry(len(g.adjacency[s.vertices[0]]) + 1, len(s.vertices) - 1, Provenance.SEPARATOR_T6, s.vertices)
        for s in cs.separators
        if len(s.vertices) >= 2
    ]


def boundary_families(cs: CliqueStructure) -> list[BoundaryFamily]:
    """Group boundary cliques by the separator they contain.

    The non-simplicial part of a boundary clique equals one clique-tree edge
    intersection, hence one separator, which names the family.
    """
    owner = _require_strict(cs)
    grouped: dict[int, list[FamilyClique]] = {}
    for q in boundary_cliques(cs):
        members = cs.cliques[q]
        simp = tuple(v for v in members if cs.simplicial[v])
        anchor = next(v for v in members if not cs.simplicial[v])
        sid = owner[anchor]
        grouped.setdefault(sid, []).append(FamilyClique(q, len(members), simp))

    fams = []
    for sid in sorted(grouped):
        cliques = tuple(grouped[sid])
        pooled = tuple(sorted(v for c in cliques for v in c.simplicial))
        # a simplicial vertex alone in its clique has open neighbourhood S;
        # two or more of those are mutual false twins
        singles = [c.simplicial[0] for c in cliques if len(c.simplicial) == 1]
        false_twins = tuple(sorted(singles)) if len(singles) >= 2 else ()
        fams.append(BoundaryFamily(sid, cs.separators[sid].vertices, cliques, pooled, false_twins))
    return fams


def boundary_eigenvalues(fams: list[BoundaryFamily]) -> StructuralSpectrum:
    """Per family with ``|B(S)| > 1``: ``|Q_k|`` with multiplicity ``|P_k| - 1``
    for every clique, and ``|S|`` with multiplicity ``b - 1``."""
    entries = []
    for fam in fams:
        if not fam.in_s_star:
            continue
        for c in fam.cliques:
            if len(c.simplicial) >= 2:
                entries.append(
                    Entry(c.size, len(c.simplicial) - 1, Provenance.BOUNDARY_CLIQUE_SIZE_C1A, c.simplicial)
                )
        entries.append(
            Entry(len(fam.separator), fam.b - 1, Provenance.SEPARATOR_COUNT_C1B, fam.pooled_simplicials)
        )
    return make_spectrum(entries)


def non_boundary_simplicial_eigenvalues(cs: CliqueStructure, fams: list[BoundaryFamily]) -> StructuralSpectrum:
    """``|Q|`` with multiplicity ``|P| - 1`` for simplicial cliques outside every
    family with ``|B(S)| > 1``; ``P`` is a true-twin class with closed
    neighbourhood ``Q``."""
    _require_strict(cs)
    covered = {c.clique_id for f in fams if f.in_s_star for c in f.cliques}
    entries = []
    for q, members in enumerate(cs.cliques):
        if q in covered:
            continue
        simp = tuple(v for v in members if cs.simplicial[v])
        if len(simp) >= 2:
            entries.append(Entry(len(members), len(simp) - 1, Provenance.NON_BOUNDARY_SIMPLICIAL_T3, simp))
    return make_spectrum(entries)


def uniquely_provided_count(fam: BoundaryFamily) -> int:
    """Eigenvalues of a family not already certified by the twin rules."""
    pooled = len(fam.pooled_simplicials)
    within = sum(len(c.simplicial) - 1 for c in fam.cliques)
    if not fam.false_twin_subset:
        return pooled - 1 - within
    return pooled - within - len(fam.false_twin_subset)


@dataclass(frozen=True)
class PipelineResult:
    spectrum: StructuralSpectrum
    twins: TwinPartition
    chordal: bool
    strictly_chordal: bool
    structure: CliqueStructure | None
    families: tuple[BoundaryFamily, ...]
    witness: tuple[int, ...] | None


def run_pipeline(g: Graph) -> PipelineResult:
    """All five stages, keeping the intermediate structures for reporting."""
    if not is_connected(g):
        raise HypothesisError("the structural pipeline requires a connected graph")
    tp = twin_partition(g)
    twins = twin_entries(g, tp)

    # step 1: cliques, separators, per-vertex separator labels
    chordal = _recognize(g)
    if not chordal.chordal:
        spec = make_spectrum(merge_entries(twins), partial=True, notes=("not chordal",))
        return PipelineResult(spec, tp, False, False, None, (), chordal.witness)
    cs = chordal.structure
    if not recognize_strictly_chordal(g, cs):
        spec = make_spectrum(merge_entries(twins), partial=True, notes=("not strictly chordal",))
        return PipelineResult(spec, tp, True, False, cs, (), None)

    # step 2: separators of size >= 2
    entries = _separator_entries(g, cs)
    # steps 3-4: boundary families
    fams = boundary_families(cs)
    entries += boundary_eigenvalues(fams).entries
    # steps 4 (|B(S)| = 1) and 5: remaining simplicial cliques
    entries += non_boundary_simplicial_eigenvalues(cs, fams).entries
    spec = make_spectrum(merge_entries(entries + twins))
    return PipelineResult(spec, tp, True, True, cs, tuple(fams), None)


def structural_pipeline(g: Graph) -> StructuralSpectrum:
    """Integer Laplacian eigenvalues of a connected graph certified by its structure.

    Non-strictly-chordal input falls back to the twin and universal-vertex
    results, flagged ``partial``.
    """
    return run_pipeline(g).spectrum
