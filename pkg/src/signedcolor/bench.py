"""Runtime scaling of :func:`five_list_color` on stacked triangulations."""

from __future__ import annotations

import json
import time
from dataclasses import asdict, dataclass
from typing import Sequence

import numpy as np

from .generators import gen_lists, gen_stacked_triangulation
from .instance import FORMAT_VERSION
from .solver import five_list_color


@dataclass(frozen=True)
class BenchRow:
    n: int
    mean_runtime: float
    trials: int


@dataclass(frozen=True)
class BenchReport:
    rows: tuple[BenchRow, ...]
    fitted_exponent: float
    seed: int

    def to_json(self) -> str:
        body = {"format_version": FORMAT_VERSION, "seed": self.seed, "fitted_exponent": self.fitted_exponent}
        body["rows"] = [asdict(r) for r in self.rows]
        return json.dumps(body, indent=2) + "\n"


def fit_exponent(ns: Sequence[float], times: Sequence[float]) -> float:
    """Least-squares slope of log(time) against log(n)."""
    slope, _ = np.polyfit(np.log(ns), np.log(times), 1)
    return float(slope)


def run_bench(sizes: Sequence[int], trials: int = 5, seed: int = 0, negative_probability: float = 0.5) -> BenchReport:
    """Time five_list_color on fresh instances; generation is not timed.

    Trial ``t`` at size ``n`` uses seed ``seed + 1000 * t + n`` so rows are
    independent of the other sizes requested.
    """
    if trials < 3:
        raise ValueError("trials >= 3 required")
    if list(sizes) != sorted(sizes) or len(set(sizes)) != len(sizes):
        raise ValueError("sizes must be strictly ascending")
    if len(sizes) < 2:
        raise ValueError("need at least two sizes to fit an exponent")
    rows = []
    for n in sizes:
        elapsed = []
        for t in range(trials):
            s = seed + 1000 * t + n
            inst = gen_stacked_triangulation(n, s, negative_probability)
            pg = inst.plane()
            lists = gen_lists(inst, "uniform", 5, (-10, 10), s)
            start = time.perf_counter()
            five_list_color(pg, lists)
            elapsed.append(time.perf_counter() - start)
        rows.append(BenchRow(n, float(np.mean(elapsed)), trials))
    exponent = fit_exponent([r.n for r in rows], [r.mean_runtime for r in rows])
    return BenchReport(tuple(rows), exponent, seed)
