"""Benchmark harness: sweep generated instances, emit stable CSV.

One record per (instance, algorithm): wall time is the median of the
timed trials, after one untimed warmup solve.  Records for the same
instance are required to agree on deleted_count across algorithms; a
disagreement aborts the sweep as a cross-check failure.
"""

from __future__ import annotations

import csv
import json
import time
from dataclasses import dataclass
from statistics import median
from typing import Callable

from .edge_deletion import EdcResult, edc_brute_force, edc_subset_dp, edc_tree_enum
from .errors import CrossCheckError
from .generate import gen_instance
from .graph import Graph

CSV_COLUMNS = ("instance", "n", "m", "algorithm", "deleted_count", "wall_time_s", "stats")

_SOLVERS: dict[str, Callable[[Graph], EdcResult]] = {
    "dp": edc_subset_dp,
    "enum": edc_tree_enum,
    "brute": edc_brute_force,
}


@dataclass(frozen=True)
class BenchRecord:
    instance: str
    n: int
    m: int
    algorithm: str
    deleted_count: int
    wall_time_s: float
    stats: dict


def run_bench(
    kind: str,
    n_values: list[int],
    trials: int,
    algos: list[str],
    extra_edges: int = 3,
    seed_base: int = 0,
) -> list[BenchRecord]:
    for a in algos:
        if a not in _SOLVERS:
            raise ValueError(f"unknown algorithm {a!r}")
    records: list[BenchRecord] = []
    for n in n_values:
        max_extra = n * (n - 1) // 2 - (n - 1)
        extra = min(extra_edges, max_extra)
        seed = seed_base + n
        g = gen_instance(kind, n, extra_edges=extra, seed=seed)
        instance = f"{kind}-n{n}-x{extra}-s{seed}"
        answers: dict[str, int] = {}
        for algo in algos:
            solve = _SOLVERS[algo]
            result = solve(g)  # warmup, untimed
            times = []
            for _ in range(trials):
                t0 = time.perf_counter()
                result = solve(g)
                times.append(time.perf_counter() - t0)
            answers[algo] = result.deleted_count
            stats = {k: v for k, v in result.stats.items()}
            records.append(BenchRecord(
                instance=instance,
                n=g.n,
                m=g.m,
                algorithm=algo,
                deleted_count=result.deleted_count,
                wall_time_s=median(times),
                stats=stats,
            ))
        if len(set(answers.values())) > 1:
            raise CrossCheckError(f"algorithms disagree on {instance}: {answers}")
    return records


def write_csv(records: list[BenchRecord], path: str) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(CSV_COLUMNS)
        for r in records:
            writer.writerow([
                r.instance, r.n, r.m, r.algorithm, r.deleted_count,
                f"{r.wall_time_s:.6f}", json.dumps(r.stats, sort_keys=True),
            ])
