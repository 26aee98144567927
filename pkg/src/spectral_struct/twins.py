"""Universal vertices and maximal false/true twin classes.

Open neighbourhoods ``N(v)`` and closed neighbourhoods ``N[v]`` are sorted
lexicographically with a radix sort for variable-length strings, after which
twins sit in consecutive runs of equal keys.
"""

from __future__ import annotations

from itertools import chain
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import HypothesisError
from .graph import Graph, is_complete, is_connected
from .structural import Entry, Provenance, StructuralSpectrum, make_spectrum, merge_entries


@dataclass(frozen=True)
class TwinClass:
    vertices: tuple[int, ...]
    degree: int


@dataclass(frozen=True)
class TwinPartition:
    false_classes: tuple[TwinClass, ...]
    true_classes: tuple[TwinClass, ...]
    universal: tuple[int, ...]

    def class_of(self, v: int) -> TwinClass | None:
        for c in self.false_classes + self.true_classes:
            if v in c.vertices:
                return c
        return None


def _stable_radix_argsort(col: np.ndarray) -> np.ndarray:
    """Stable argsort of non-negative 32-bit ints: two 16-bit LSD radix passes.

    NumPy's stable sort on 16-bit integers is a counting/radix sort, so each
    pass is linear in ``len(col)``. The pass count is fixed by the word width,
    not by the largest key.
    """
    order = np.argsort((col & 0xFFFF).astype(np.uint16), kind="stable")
    digit = (col[order] >> 16).astype(np.uint16)
    return order[np.argsort(digit, kind="stable")]


def _csr(keys: Sequence[Sequence[int]]) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    n = len(keys)
    lengths = np.fromiter(map(len, keys), dtype=np.int32, count=n)
    flat = np.fromiter(chain.from_iterable(keys), dtype=np.int32, count=int(lengths.sum()))
    offsets = np.zeros(n, dtype=np.int32)
    np.cumsum(lengths[:-1], out=offsets[1:])
    return flat, offsets, lengths


def _lex_order_csr(flat: np.ndarray, offsets: np.ndarray, lengths: np.ndarray) -> np.ndarray:
    n = lengths.size
    if n == 0:
        return np.zeros(0, dtype=np.int32)
    lmax = int(lengths.max())
    ids = np.arange(n, dtype=np.int32)
    # relabel by decreasing length (ties by id), so the keys still alive at
    # position p are exactly the new ids 0..alive[p]-1
    by_len = _stable_radix_argsort(lmax - lengths).astype(np.int32)
    new_id = np.empty(n, dtype=np.int32)
    new_id[by_len] = ids
    hist = np.bincount(lengths, minlength=lmax + 1)
    alive = n - np.cumsum(hist)[:lmax]  # alive[p] = #keys longer than p

    # column-major copy: block p holds character p of every alive key, by new id
    col_start = np.zeros(lmax + 1, dtype=np.int32)
    np.cumsum(alive, out=col_start[1:])
    pos = np.arange(flat.size, dtype=np.int32) - np.repeat(offsets, lengths)
    columns = np.empty(flat.size, dtype=flat.dtype)
    columns[col_start[pos] + np.repeat(new_id, lengths)] = flat

    queue = np.zeros(0, dtype=np.int32)
    for p in range(lmax - 1, -1, -1):
        hi = alive[p]
        lo = alive[p + 1] if p + 1 < lmax else 0
        if hi > lo:
            queue = np.concatenate((ids[lo:hi], queue))
        col = columns[col_start[p] + queue]
        queue = queue[_stable_radix_argsort(col)]
    # keys of length zero come first
    empties = ids[alive[0] if lmax else 0:]
    return by_len[np.concatenate((empties, queue))]


def lex_order(keys: Sequence[Sequence[int]]) -> list[int]:
    """Indices of ``keys`` in lexicographic order (stable, a proper prefix first).

    LSD radix sort for variable-length strings: positions are processed from
    last to first, a key joins the front of the queue once the scan reaches
    its length, and each position is one stable radix pass over the queue.
    Total work is ``O(total key length + number of keys)`` plus ``O(1)`` per
    position.
    """
    if not keys:
        return []
    if any(x < 0 or x >= 1 << 31 for k in keys for x in k):
        raise ValueError("keys must hold non-negative 32-bit integers")
    return _lex_order_csr(*_csr(keys)).tolist()


def _same_as_next(flat: np.ndarray, offsets: np.ndarray, lengths: np.ndarray, order: np.ndarray) -> np.ndarray:
    """``out[i]`` is True when keys ``order[i]`` and ``order[i + 1]`` are equal."""
    a, b = order[:-1], order[1:]
    cand = np.flatnonzero(lengths[a] == lengths[b])
    la = lengths[a[cand]]
    seg = np.repeat(np.arange(cand.size, dtype=np.int32), la)
    seg_start = np.zeros(cand.size, dtype=np.int32)
    np.cumsum(la[:-1], out=seg_start[1:])
    within = np.arange(seg.size, dtype=np.int32) - seg_start[seg]
    differs = flat[offsets[a[cand]][seg] + within] != flat[offsets[b[cand]][seg] + within]
    bad = np.bincount(seg[differs], minlength=cand.size) > 0
    out = np.zeros(a.size, dtype=bool)
    out[cand[~bad]] = True
    return out


def _classes(flat, offsets, lengths, degree: np.ndarray) -> tuple[TwinClass, ...]:
    order = _lex_order_csr(flat, offsets, lengths)
    run = np.concatenate(([0], np.cumsum(~_same_as_next(flat, offsets, lengths, order))))
    size = np.bincount(run)
    keep = size[run] > 1
    # every pass is stable from an id-ordered start, so each run is ascending
    members, run = order[keep], run[keep]
    if members.size == 0:
        return ()
    starts = np.flatnonzero(np.concatenate(([True], run[1:] != run[:-1])))
    ends = np.append(starts[1:], members.size)
    # classes are disjoint, so ordering by smallest member orders the tuples
    rank = _stable_radix_argsort(members[starts])
    flat_members = members.tolist()
    degs = degree[members[starts]].tolist()
    return tuple(
        TwinClass(tuple(flat_members[a:b]), degs[i])
        for i, a, b in zip(rank.tolist(), starts[rank].tolist(), ends[rank].tolist())
    )


def _closed_csr(flat: np.ndarray, offsets: np.ndarray, lengths: np.ndarray):
    """CSR of ``N[v]`` from the sorted CSR of ``N(v)``, inserting ``v`` in order."""
    n = lengths.size
    ids = np.arange(n, dtype=np.int32)
    row = np.repeat(ids, lengths)
    above = flat > row
    c_offsets = offsets + ids
    c_flat = np.empty(flat.size + n, dtype=np.int32)
    c_flat[np.arange(flat.size, dtype=np.int32) + row + above] = flat
    below = np.bincount(row[~above], minlength=n).astype(np.int32)
    c_flat[c_offsets + below] = ids
    return c_flat, c_offsets, lengths + 1


def twin_partition(g: Graph) -> TwinPartition:
    if g.n == 0:
        return TwinPartition((), (), ())
    flat, offsets, lengths = g.indices, g.indptr[:-1], np.diff(g.indptr)
    false_classes = _classes(flat, offsets, lengths, lengths)
    true_classes = _classes(*_closed_csr(flat, offsets, lengths), lengths)
    # a pair cannot be both false (non-adjacent) and true (adjacent) twins
    in_false = {v for c in false_classes for v in c.vertices}
    assert not any(v in in_false for c in true_classes for v in c.vertices)

    universal = tuple(np.flatnonzero(lengths == g.n - 1).tolist())
    return TwinPartition(false_classes, true_classes, universal)


def twin_eigenvalues(g: Graph, p: TwinPartition | None = None) -> StructuralSpectrum:
    """Eigenvalues certified by universal vertices and twin classes.

    A false class of common degree ``d`` gives ``d`` with multiplicity
    ``|F| - 1``; a true class gives ``d + 1`` with ``|T| - 1``; ``k >= 1``
    universal vertices in a non-complete graph give ``n`` with multiplicity
    ``k``. Raises :class:`HypothesisError` on disconnected input.
    """
    if not is_connected(g):
        raise HypothesisError("twin eigenvalues require a connected graph")
    return make_spectrum(twin_entries(g, twin_partition(g) if p is None else p))


def twin_entries(g: Graph, p: TwinPartition) -> list[Entry]:
    """Unsorted entries of :func:`twin_eigenvalues`; connectivity is the caller's job."""
    entries = [
        Entry(c.degree, len(c.vertices) - 1, Provenance.FALSE_TWIN, c.vertices)
        for c in p.false_classes
    ]
    entries += [
        Entry(c.degree + 1, len(c.vertices) - 1, Provenance.TRUE_TWIN, c.vertices)
        for c in p.true_classes
    ]
    if p.universal and not is_complete(g):
        entries.append(Entry(g.n, len(p.universal), Provenance.UNIVERSAL, p.universal))
    return entries


def condense(spectrum: StructuralSpectrum) -> dict[int, int]:
    """Multiplicity per eigenvalue after merging claims on shared anchors."""
    return make_spectrum(merge_entries(spectrum.entries)).condense()
