"""Laplacian matrices and their spectra: exact integer multiplicities and numeric eigenvalues."""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from ..graph import Graph
from .bareiss import bareiss_rank
from .jacobi import jacobi_eigenvalues

DEFAULT_TOL = 1e-12
INTEGER_MATCH_TOL = 1e-6


def default_tol() -> float:
    """Numeric tolerance, overridable through ``SPECTRAL_STRUCT_TOL``."""
    raw = os.environ.get("SPECTRAL_STRUCT_TOL")
    if not raw:
        return DEFAULT_TOL
    tol = float(raw)
    if not tol > 0:
        raise ValueError("SPECTRAL_STRUCT_TOL must be positive")
    return tol


@dataclass(frozen=True)
class LaplacianMatrix:
    n: int
    entries: tuple[tuple[int, ...], ...]

    def array(self) -> np.ndarray:
        return np.array(self.entries, dtype=float).reshape(self.n, self.n)

    def shifted(self, lam: int) -> list[list[int]]:
        """Rows of ``L - lam * I`` as Python integers."""
        rows = [list(r) for r in self.entries]
        for i in range(self.n):
            rows[i][i] -= lam
        return rows


def laplacian(g: Graph) -> LaplacianMatrix:
    rows = []
    for v, nb in enumerate(g.adjacency):
        row = [0] * g.n
        row[v] = len(nb)
        for w in nb:
            row[w] = -1
        rows.append(tuple(row))
    return LaplacianMatrix(g.n, tuple(rows))


def _as_laplacian(obj) -> LaplacianMatrix:
    return laplacian(obj) if isinstance(obj, Graph) else obj


def integer_multiplicity(L: LaplacianMatrix | Graph, lam: int) -> int:
    """Exact multiplicity of the integer ``lam`` in the spectrum: ``n - rank(L - lam I)``.

    Uses the symmetric matrix's block structure per connected component so
    that elimination runs on the smaller blocks.
    """
    if lam < 0:
        raise ValueError("Laplacian eigenvalues are non-negative")
    L = _as_laplacian(L)
    if L.n == 0:
        return 0
    total = 0
    for block in _blocks(L):
        rows = [[L.entries[i][j] for j in block] for i in block]
        for k in range(len(block)):
            rows[k][k] -= lam
        total += len(block) - bareiss_rank(rows)
    return total


def _blocks(L: LaplacianMatrix) -> list[list[int]]:
    seen = [False] * L.n
    out = []
    for s in range(L.n):
        if seen[s]:
            continue
        seen[s] = True
        block, stack = [s], [s]
        while stack:
            u = stack.pop()
            for w, x in enumerate(L.entries[u]):
                if x and not seen[w]:
                    seen[w] = True
                    block.append(w)
                    stack.append(w)
        out.append(sorted(block))
    return out


def numeric_spectrum(L: LaplacianMatrix | Graph, tol: float | None = None) -> list[float]:
    """All eigenvalues, ascending, with values within ``tol``-scale of zero clamped to 0."""
    return list(numeric_spectrum_with_residual(L, tol)[0])


def numeric_spectrum_with_residual(L: LaplacianMatrix | Graph, tol: float | None = None):
    L = _as_laplacian(L)
    tol = default_tol() if tol is None else tol
    if not tol > 0:
        raise ValueError("tol must be positive")
    values, residual = jacobi_eigenvalues(L.array(), tol=tol)
    # Weyl: each eigenvalue is within the off-diagonal norm of its diagonal estimate
    slack = max(residual, tol) * max(1.0, float(L.n))
    values = np.where((values < 0) & (values > -slack), 0.0, values)
    return [float(v) for v in values], residual


def integer_counts(values: Iterable[float], tol: float = INTEGER_MATCH_TOL) -> dict[int, int]:
    """How many numeric eigenvalues fall within ``tol`` of each integer."""
    out: dict[int, int] = {}
    for v in values:
        r = round(v)
        if abs(v - r) <= tol:
            out[r] = out.get(r, 0) + 1
    return dict(sorted(out.items()))


@dataclass(frozen=True)
class ExactReport:
    candidates: tuple[tuple[int, int], ...]
    numeric_spectrum: tuple[float, ...] | None = None
    residual: float | None = None

    def multiplicity(self, lam: int) -> int:
        return dict(self.candidates).get(lam, 0)

    def nonzero(self) -> dict[int, int]:
        return {lam: k for lam, k in self.candidates if k}


def exact_report(g: Graph, candidates: Iterable[int] | None = None, full: bool = False,
                 tol: float | None = None) -> ExactReport:
    """Exact multiplicities of integer candidates (default ``0..n``), optionally with the numeric spectrum."""
    L = laplacian(g)
    cands = range(g.n + 1) if candidates is None else sorted(set(candidates))
    mults = tuple((lam, integer_multiplicity(L, lam)) for lam in cands)
    if not full:
        return ExactReport(mults)
    values, residual = numeric_spectrum_with_residual(L, tol)
    return ExactReport(mults, tuple(values), residual)


def format_spectrum(values: Iterable[float], tol: float = INTEGER_MATCH_TOL) -> str:
    """Bracket notation ``[0; 1.18541; 7^{(2)}; ...]``; integers are grouped with multiplicities."""
    parts: list[str] = []
    vals = sorted(values)
    i = 0
    while i < len(vals):
        v = vals[i]
        r = round(v)
        if abs(v - r) <= tol:
            j = i
            while j < len(vals) and abs(vals[j] - r) <= tol:
                j += 1
            k = j - i
            parts.append(f"{r}" if k == 1 else f"{r}^{{({k})}}")
            i = j
        else:
            parts.append(f"{v:.5f}")
            i += 1
    return "[" + "; ".join(parts) + "]"


def format_multiplicities(mults: dict[int, int], descending: bool = False) -> str:
    """``0^(1) 5^(4)`` style listing of non-zero multiplicities."""
    items = sorted(((lam, k) for lam, k in mults.items() if k), reverse=descending)
    return " ".join(f"{lam}^({k})" for lam, k in items)
