"""Exception types shared across the package."""

from __future__ import annotations


class ParseError(ValueError):
    """Malformed edge-list input. ``lineno`` is 1-based, or 0 for whole-input errors."""

    def __init__(self, lineno: int, message: str):
        self.lineno = lineno
        self.message = message
        where = f"line {lineno}: " if lineno else ""
        super().__init__(f"{where}{message}")


class HypothesisError(ValueError):
    """Input does not satisfy the hypotheses an operation requires
    (disconnected graph, non-chordal graph, overlapping clusters, ...)."""


class ConvergenceError(RuntimeError):
    def __init__(self, message: str, residual: float):
        self.residual = residual
        super().__init__(f"{message} (residual {residual:.3e})")
