"""Doubling experiments for the linear-time stages."""

from __future__ import annotations

import gc
import math
import time
from dataclasses import dataclass
from typing import Callable, Sequence

from .chordal import recognize_chordal
from .generators import gen_connected_gnp, gen_strictly_chordal
from .graph import Graph
from .strictly import structural_pipeline
from .twins import twin_partition

STAGES: dict[str, Callable[[Graph], object]] = {
    "twin_partition": twin_partition,
    "recognize_chordal": recognize_chordal,
    "structural_pipeline": structural_pipeline,
}


@dataclass(frozen=True)
class BenchRow:
    n: int
    m: int
    seconds: dict[str, float]


@dataclass(frozen=True)
class BenchResult:
    rows: tuple[BenchRow, ...]
    exponents: dict[str, float]


def fit_exponent(sizes: Sequence[float], seconds: Sequence[float]) -> float:
    """Least-squares slope of ``log(seconds)`` against ``log(size)``."""
    if len(sizes) < 2:
        return float("nan")
    xs = [math.log(s) for s in sizes]
    ys = [math.log(max(t, 1e-9)) for t in seconds]
    mx, my = sum(xs) / len(xs), sum(ys) / len(ys)
    sxx = sum((x - mx) ** 2 for x in xs)
    if sxx == 0:
        return float("nan")
    return sum((x - mx) * (y - my) for x, y in zip(xs, ys)) / sxx


def time_stage(fn: Callable[[Graph], object], g: Graph, repeat: int) -> float:
    best = math.inf
    enabled = gc.isenabled()
    gc.disable()
    try:
        for _ in range(repeat):
            t0 = time.perf_counter()
            fn(g)
            best = min(best, time.perf_counter() - t0)
    finally:
        if enabled:
            gc.enable()
    return best


def make_graph(family: str, n: int, seed: int, avg_degree: float = 4.0) -> Graph:
    if family == "strictly-chordal":
        return gen_strictly_chordal(seed, n)
    if family == "gnp":
        return gen_connected_gnp(seed, n, min(1.0, avg_degree / max(n - 1, 1)))
    raise ValueError(f"unknown bench family {family!r}")


def run_bench(
    sizes: Sequence[int],
    seed: int = 1,
    family: str = "strictly-chordal",
    repeat: int = 3,
    stages: Sequence[str] = tuple(STAGES),
    avg_degree: float = 4.0,
) -> BenchResult:
    """Time each stage on one generated graph per size and fit ``time ~ (n + m)^k``."""
    rows = []
    for i, n in enumerate(sizes):
        g = make_graph(family, n, seed + i, avg_degree)
        secs = {name: time_stage(STAGES[name], g, repeat) for name in stages}
        rows.append(BenchRow(g.n, g.m, secs))
    exps = {
        name: fit_exponent([r.n + r.m for r in rows], [r.seconds[name] for r in rows])
        for name in stages
    }
    return BenchResult(tuple(rows), exps)


def format_table(res: BenchResult) -> str:
    names = list(res.exponents)
    head = ["n", "m", *names]
    out = ["\t".join(head)]
    for r in res.rows:
        out.append("\t".join([str(r.n), str(r.m), *(f"{r.seconds[k]:.4f}" for k in names)]))
    out.append("\t".join(["exponent", "", *(f"{res.exponents[k]:.3f}" for k in names)]))
    return "\n".join(out) + "\n"
