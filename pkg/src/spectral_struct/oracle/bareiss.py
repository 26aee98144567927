"""Exact rank of integer matrices by fraction-free (Bareiss) elimination."""

from __future__ import annotations

from typing import Sequence


def bareiss_rank(matrix: Sequence[Sequence[int]]) -> int:
    """Rank over the rationals of an integer matrix, using only exact integer arithmetic.

    Each elimination step computes ``(p * a_ij - a_ik * a_kj) // prev`` where
    ``p`` is the current pivot and ``prev`` the previous one; the division is
    exact (Sylvester's identity), so entries stay integral and bounded by the
    matrix minors. Columns without a pivot are skipped, which keeps the
    identity valid for singular input.
    """
    rows = [list(r) for r in matrix]
    rows = [r for r in rows if any(r)]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    prev = 1
    col = 0
    while rank < len(rows) and col < ncols:
        piv = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if piv is None:
            col += 1
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        prow = rows[rank]
        p = prow[col]
        tail = prow[col + 1:]
        survivors = rows[: rank + 1]
        for r in rows[rank + 1:]:
            a = r[col]
            if a:
                new = [(p * x - a * y) // prev for x, y in zip(r[col + 1:], tail)]
            else:
                new = [(p * x) // prev for x in r[col + 1:]]
            if any(new):
                survivors.append([0] * (col + 1) + new)
        rows = survivors
        prev = p
        rank += 1
        col += 1
    return rank
