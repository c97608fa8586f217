"""Scaling benchmarks: wall-clock sweeps and log-log slope fits.

The sweep generates random layered graphs of increasing edge count (layer
count held fixed, width scaled), times the 2-DSP decision on each, and fits
a straight line to log(time) against log(m).  A slope near 1 is empirical
evidence of linear scaling.  Generation time is excluded from the timed
region; per-phase timings are reported alongside.
"""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass

from . import dsp2
from .graph import Graph
from .instances import layered_graph


@dataclass
class BenchRow:
    mode: str
    n: int
    m: int
    seconds: float
    verdict: str


def _time_decide(g: Graph, rng: random.Random, trials: int = 2) -> tuple[float, str]:
    t0 = time.perf_counter()
    verdict = dsp2.decide_2dsp(g, trials=trials, rng=rng)
    return time.perf_counter() - t0, verdict.answer


def generate_bench_graph(
    rng: random.Random, mode: str, target_m: int, layers: int = 24, avg_degree: int = 8
) -> Graph:
    width = max(4, target_m // ((layers - 1) * avg_degree))
    return layered_graph(
        rng, layers=layers, width=width, avg_degree=avg_degree, mode=mode
    )


def run_sweep(
    mode: str,
    sizes: list[int],
    seed: int = 0,
    trials: int = 2,
    layers: int = 24,
    warmup: bool = True,
) -> list[BenchRow]:
    rng = random.Random(seed)
    rows = []
    if warmup:
        # absorb one-time JIT compilation outside the timed region
        g = generate_bench_graph(rng, mode, max(2000, sizes[0] // 4), layers=layers)
        _time_decide(g, rng, trials=trials)
    for target in sizes:
        g = generate_bench_graph(rng, mode, target, layers=layers)
        seconds, verdict = _time_decide(g, rng, trials=trials)
        rows.append(BenchRow(mode=mode, n=g.n, m=g.m, seconds=seconds, verdict=verdict))
    return rows


def fit_slope(rows: list[BenchRow]) -> float:
    """Least-squares slope of log(seconds) against log(m)."""
    xs = [math.log(r.m) for r in rows]
    ys = [math.log(max(r.seconds, 1e-9)) for r in rows]
    n = len(xs)
    mx = sum(xs) / n
    my = sum(ys) / n
    num = sum((x - mx) * (y - my) for x, y in zip(xs, ys))
    den = sum((x - mx) ** 2 for x in xs)
    return num / den if den else 0.0


CSV_HEADER = "mode,n,m,seconds,verdict"


def to_csv(rows: list[BenchRow]) -> str:
    lines = [CSV_HEADER]
    for r in rows:
        lines.append(f"{r.mode},{r.n},{r.m},{r.seconds:.6f},{r.verdict}")
    return "\n".join(lines) + "\n"


def parse_csv(text: str) -> list[BenchRow]:
    lines = [ln for ln in text.strip().splitlines() if ln]
    if not lines or lines[0] != CSV_HEADER:
        raise ValueError("bad bench CSV header")
    rows = []
    for ln in lines[1:]:
        mode, n, m, seconds, verdict = ln.split(",")
        rows.append(
            BenchRow(mode=mode, n=int(n), m=int(m), seconds=float(seconds), verdict=verdict)
        )
    return rows
