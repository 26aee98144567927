"""Dense symmetric eigenvalues by cyclic Jacobi rotations.

Rotations are applied in round-robin order: each round pairs every index
with a distinct partner, so the ``n // 2`` rotations of a round commute and
are applied together as whole-row and whole-column updates.
"""

from __future__ import annotations

import numpy as np

from ..errors import ConvergenceError


def _round_robin(n: int) -> list[tuple[np.ndarray, np.ndarray]]:
    """Disjoint index pairs for each round of a sweep (circle method)."""
    m = n + (n % 2)
    players = list(range(m))
    rounds = []
    for _ in range(m - 1):
        ps, qs = [], []
        for i in range(m // 2):
            a, b = players[i], players[m - 1 - i]
            if a < n and b < n:
                ps.append(min(a, b))
                qs.append(max(a, b))
        rounds.append((np.array(ps, dtype=np.intp), np.array(qs, dtype=np.intp)))
        players = [players[0], players[-1], *players[1:-1]]
    return rounds


def off_norm(a: np.ndarray) -> float:
    # summed directly; ||A||^2 - ||diag||^2 cancels once the off part is small
    off = a.copy()
    np.fill_diagonal(off, 0.0)
    return float(np.linalg.norm(off))


def jacobi_eigenvalues(matrix, tol: float = 1e-12, max_sweeps: int = 100) -> tuple[np.ndarray, float]:
    """Eigenvalues (ascending) of a real symmetric matrix and the final off-diagonal norm.

    Iterates until the off-diagonal Frobenius norm drops below
    ``tol * max(1, ||A||_F)``. Raises :class:`ConvergenceError` after
    ``max_sweeps`` sweeps.
    """
    a = np.array(matrix, dtype=float)
    n = a.shape[0]
    if a.shape != (n, n):
        raise ValueError("matrix must be square")
    if n == 0:
        return np.zeros(0), 0.0
    if not np.allclose(a, a.T, rtol=0, atol=1e-12 * max(1.0, np.abs(a).max())):
        raise ValueError("matrix must be symmetric")
    a = (a + a.T) / 2
    threshold = tol * max(1.0, float(np.linalg.norm(a)))
    rounds = _round_robin(n)
    residual = off_norm(a)
    for _ in range(max_sweeps):
        if residual < threshold:
            break
        for p, q in rounds:
            if p.size == 0:
                continue
            apq = a[p, q]
            active = np.abs(apq) > 1e-300
            if not active.any():
                continue
            p, q, apq = p[active], q[active], apq[active]
            theta = (a[q, q] - a[p, p]) / (2.0 * apq)
            t = np.where(theta < 0, -1.0, 1.0) / (np.abs(theta) + np.hypot(theta, 1.0))
            c = 1.0 / np.sqrt(t * t + 1.0)
            s = t * c
            rp, rq = a[p, :], a[q, :]
            a[p, :] = c[:, None] * rp - s[:, None] * rq
            a[q, :] = s[:, None] * rp + c[:, None] * rq
            cp, cq = a[:, p], a[:, q]
            a[:, p] = cp * c - cq * s
            a[:, q] = cp * s + cq * c
            a[p, q] = 0.0
            a[q, p] = 0.0
        residual = off_norm(a)
    else:
        if residual >= threshold:
            raise ConvergenceError(f"Jacobi did not converge in {max_sweeps} sweeps", residual)
    return np.sort(np.diag(a)), residual
