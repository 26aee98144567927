"""Integer Laplacian eigenvalues derived from graph structure, with provenance."""

from __future__ import annotations

import enum
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable


class Provenance(str, enum.Enum):
    UNIVERSAL = "Universal"
    FALSE_TWIN = "FalseTwin"
    TRUE_TWIN = "TrueTwin"
    SEPARATOR_T6 = "SeparatorT6"
    BOUNDARY_CLIQUE_SIZE_C1A = "BoundaryCliqueSizeC1a"
    SEPARATOR_COUNT_C1B = "SeparatorCountC1b"
    NON_BOUNDARY_SIMPLICIAL_T3 = "NonBoundarySimplicialT3"

    def __str__(self) -> str:
        return self.value


# Higher wins when two rules claim the same (anchor, lambda) with equal multiplicity.
_PRIORITY = {
    Provenance.UNIVERSAL: 6,
    Provenance.BOUNDARY_CLIQUE_SIZE_C1A: 5,
    Provenance.SEPARATOR_COUNT_C1B: 5,
    Provenance.SEPARATOR_T6: 4,
    Provenance.NON_BOUNDARY_SIMPLICIAL_T3: 3,
    Provenance.TRUE_TWIN: 2,
    Provenance.FALSE_TWIN: 1,
}


@dataclass(frozen=True)
class Entry:
    """``lam`` is a Laplacian eigenvalue with multiplicity at least ``multiplicity``.

    ``anchor`` is the vertex set whose structure certifies the claim; the
    eigenvectors behind it are supported on that set. ``also`` lists other
    rules that certified the same eigenvalues and were merged into this entry.
    """

    lam: int
    multiplicity: int
    provenance: Provenance
    anchor: tuple[int, ...]
    also: tuple[Provenance, ...] = ()

    def sort_key(self) -> tuple:
        return (self.lam, self.anchor, self.provenance.value)


@dataclass(frozen=True)
class StructuralSpectrum:
    entries: tuple[Entry, ...] = ()
    partial: bool = False
    notes: tuple[str, ...] = field(default=())

    def condense(self) -> dict[int, int]:
        out: dict[int, int] = defaultdict(int)
        for e in self.entries:
            out[e.lam] += e.multiplicity
        return dict(sorted(out.items()))

    def total(self) -> int:
        return sum(e.multiplicity for e in self.entries)

    def by_provenance(self, prov: Provenance) -> list[Entry]:
        return [e for e in self.entries if e.provenance is prov]

    def __iter__(self):
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)


def make_spectrum(entries: Iterable[Entry], partial: bool = False, notes=()) -> StructuralSpectrum:
    ordered = sorted(entries, key=lambda e: (e.lam, e.anchor, e.provenance.value))
    return StructuralSpectrum(tuple(ordered), partial, tuple(notes))


def merge_entries(entries: Iterable[Entry]) -> list[Entry]:
    """Drop claims that count the same eigenvectors twice.

    Entries sharing ``(anchor, lam)`` collapse to the one with the largest
    multiplicity (ties go to the structural rule); the losers are recorded in
    ``also``. A false-twin class lying inside the pooled simplicial set of a
    separator-count entry with the same eigenvalue is absorbed by it: its
    eigenvectors are constant-on-cliques vectors already in that space.
    """
    groups: dict[tuple, list[Entry]] = defaultdict(list)
    for e in entries:
        groups[(e.anchor, e.lam)].append(e)

    kept: list[Entry] = []
    for group in groups.values():
        if len(group) == 1:
            kept.append(group[0])
            continue
        group.sort(key=lambda e: (e.multiplicity, _PRIORITY[e.provenance]), reverse=True)
        best = group[0]
        extra = tuple(dict.fromkeys(p for e in group[1:] for p in (e.provenance, *e.also)))
        kept.append(_with_also(best, extra))

    host_of: dict[int, list[int]] = defaultdict(list)
    for i, e in enumerate(kept):
        if e.provenance is Provenance.SEPARATOR_COUNT_C1B:
            for v in e.anchor:
                host_of[v].append(i)
    absorbed: dict[int, list[Provenance]] = defaultdict(list)
    dropped = set()
    for i, e in enumerate(kept):
        if e.provenance is not Provenance.FALSE_TWIN or not e.anchor:
            continue
        for h in host_of.get(e.anchor[0], ()):
            host = kept[h]
            if host.lam == e.lam and set(e.anchor).issubset(host.anchor):
                absorbed[h].append(Provenance.FALSE_TWIN)
                dropped.add(i)
                break
    return [
        _with_also(e, tuple(absorbed[i])) if i in absorbed else e
        for i, e in enumerate(kept)
        if i not in dropped
    ]


def _with_also(e: Entry, extra: tuple[Provenance, ...]) -> Entry:
    if not extra:
        return e
    merged = tuple(dict.fromkeys((*e.also, *extra)))
    merged = tuple(p for p in merged if p is not e.provenance)
    return Entry(e.lam, e.multiplicity, e.provenance, e.anchor, merged)
