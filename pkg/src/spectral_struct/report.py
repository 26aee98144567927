"""Analysis reports: a JSON-stable data model and the plain-text rendering."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field

from .errors import HypothesisError
from .graph import Graph, is_connected
from .oracle.spectrum import format_multiplicities
from .strictly import run_pipeline, uniquely_provided_count

SCHEMA = "spectral-struct/report/v1"


@dataclass
class ClassRow:
    vertices: list[str]
    degree: int


@dataclass
class SeparatorRow:
    vertices: list[str]
    multiplicity: int


@dataclass
class FamilyCliqueRow:
    clique: list[str]
    simplicial: list[str]


@dataclass
class FamilyRow:
    separator: list[str]
    cliques: list[FamilyCliqueRow]
    pooled_simplicials: list[str]
    false_twins: list[str]
    in_s_star: bool
    uniquely_provided: int | None


@dataclass
class EntryRow:
    lam: int
    multiplicity: int
    provenance: str
    anchor: list[str]
    also: list[str] = field(default_factory=list)


@dataclass
class Report:
    n: int
    m: int
    universal: list[str]
    false_classes: list[ClassRow]
    true_classes: list[ClassRow]
    chordal: bool
    witness: list[str] | None
    strictly_chordal: bool
    cliques: list[list[str]]
    separators: list[SeparatorRow]
    families: list[FamilyRow]
    entries: list[EntryRow]
    condensed: list[list[int]]
    partial: bool
    notes: list[str]
    schema: str = SCHEMA

    def condensed_dict(self) -> dict[int, int]:
        return {lam: k for lam, k in self.condensed}

    def to_json(self) -> str:
        return json.dumps(asdict(self), indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "Report":
        return cls.from_dict(json.loads(text))

    @classmethod
    def from_dict(cls, d: dict) -> "Report":
        if d.get("schema") != SCHEMA:
            raise ValueError(f"unsupported report schema {d.get('schema')!r}")
        fams = [
            FamilyRow(
                separator=f["separator"],
                cliques=[FamilyCliqueRow(**c) for c in f["cliques"]],
                pooled_simplicials=f["pooled_simplicials"],
                false_twins=f["false_twins"],
                in_s_star=f["in_s_star"],
                uniquely_provided=f["uniquely_provided"],
            )
            for f in d["families"]
        ]
        return cls(
            n=d["n"],
            m=d["m"],
            universal=d["universal"],
            false_classes=[ClassRow(**c) for c in d["false_classes"]],
            true_classes=[ClassRow(**c) for c in d["true_classes"]],
            chordal=d["chordal"],
            witness=d["witness"],
            strictly_chordal=d["strictly_chordal"],
            cliques=d["cliques"],
            separators=[SeparatorRow(**s) for s in d["separators"]],
            families=fams,
            entries=[EntryRow(**e) for e in d["entries"]],
            condensed=[list(p) for p in d["condensed"]],
            partial=d["partial"],
            notes=d["notes"],
            schema=d["schema"],
        )


def build_report(g: Graph) -> Report:
    if not is_connected(g):
        raise HypothesisError("analysis requires a connected graph")
    res = run_pipeline(g)
    names = g.names
    cs = res.structure
    fams = []
    for f in res.families:
        fams.append(
            FamilyRow(
                separator=names(f.separator),
                cliques=[FamilyCliqueRow(names(cs.cliques[c.clique_id]), names(c.simplicial)) for c in f.cliques],
                pooled_simplicials=names(f.pooled_simplicials),
                false_twins=names(f.false_twin_subset),
                in_s_star=f.in_s_star,
                uniquely_provided=uniquely_provided_count(f) if f.in_s_star else None,
            )
        )
    return Report(
        n=g.n,
        m=g.m,
        universal=names(res.twins.universal),
        false_classes=[ClassRow(names(c.vertices), c.degree) for c in res.twins.false_classes],
        true_classes=[ClassRow(names(c.vertices), c.degree) for c in res.twins.true_classes],
        chordal=res.chordal,
        witness=names(res.witness) if res.witness else None,
        strictly_chordal=res.strictly_chordal,
        cliques=[names(q) for q in cs.cliques] if cs else [],
        separators=[SeparatorRow(names(s.vertices), s.multiplicity) for s in cs.separators] if cs else [],
        families=fams,
        entries=[
            EntryRow(e.lam, e.multiplicity, e.provenance.value, names(e.anchor), [p.value for p in e.also])
            for e in res.spectrum.entries
        ],
        condensed=[[lam, k] for lam, k in res.spectrum.condense().items()],
        partial=res.spectrum.partial,
        notes=list(res.spectrum.notes),
    )


def _set(xs) -> str:
    return "{" + ",".join(xs) + "}"


def render_text(r: Report) -> str:
    lines = [f"graph: n={r.n} m={r.m}"]
    lines.append("universal: " + (_set(r.universal) if r.universal else "-"))
    lines.append(
        "false twin classes: "
        + (" ".join(f"{_set(c.vertices)} (degree {c.degree})" for c in r.false_classes) or "-")
    )
    lines.append(
        "true twin classes: "
        + (" ".join(f"{_set(c.vertices)} (degree {c.degree})" for c in r.true_classes) or "-")
    )
    lines.append(f"chordal: {str(r.chordal).lower()}")
    if r.witness:
        lines.append("witness cycle: " + " ".join(r.witness))
    lines.append(f"strictly chordal: {str(r.strictly_chordal).lower()}")
    if r.cliques:
        lines.append("maximal cliques: " + " ".join(_set(q) for q in r.cliques))
        seps = [_set(s.vertices) + (f"x{s.multiplicity}" if s.multiplicity > 1 else "") for s in r.separators]
        lines.append("minimal vertex separators: " + (" ".join(seps) or "-"))
    for f in r.families:
        cl = "; ".join(f"{_set(c.clique)} P={_set(c.simplicial)}" for c in f.cliques)
        tail = f" uniquely-provided = {f.uniquely_provided}" if f.in_s_star else ""
        lines.append(f"boundary family S={_set(f.separator)} b={len(f.cliques)}: {cl}{tail}")
    lines.append("structural spectrum" + (" (partial)" if r.partial else "") + ":")
    for e in r.entries:
        also = f" also={','.join(e.also)}" if e.also else ""
        lines.append(f"  {e.lam} {e.multiplicity} {e.provenance} {_set(e.anchor)}{also}")
    lines.append("integer eigenvalues: " + (format_multiplicities(r.condensed_dict(), descending=True) or "-"))
    for note in r.notes:
        lines.append(f"note: {note}")
    return "\n".join(lines) + "\n"
