"""Complexity benchmark: wall times (advisory) and exact operation counters (binding)."""
from __future__ import annotations

import logging
import math
import time
from dataclasses import dataclass, field
from typing import Callable, List, Optional, Sequence

import numpy as np
from tqdm import tqdm

from .. import config
from ..oracles import naive_quadratic_solve
from ..solver import solve
from .generation import Family, GenSpec, gen_instance

logger = logging.getLogger(__name__)

BENCH_DELTA = 4


def heap_ops_bound(n: int) -> float:
    return config.HEAP_OPS_FACTOR * n * math.log2(n + 2)


def _median_time(fn: Callable[[], object], repeats: int) -> float:
    samples = []
    for _ in range(repeats):
        began = time.perf_counter()
        fn()
        samples.append(time.perf_counter() - began)
    return float(np.median(samples))


@dataclass(frozen=True)
class BenchRow:
    n: int
    family: str
    spec: GenSpec
    wall_time_fast: float
    wall_time_naive: Optional[float]
    heap_ops: int
    shifts: int
    merges: int

    @property
    def heap_ops_bound(self) -> float:
        return heap_ops_bound(self.n)

    @property
    def within_bound(self) -> bool:
        return self.heap_ops <= self.heap_ops_bound

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "family": self.family,
            "spec": self.spec.to_dict(),
            "wall_time_fast": self.wall_time_fast,
            "wall_time_naive": self.wall_time_naive,
            "heap_ops": self.heap_ops,
            "heap_ops_bound": self.heap_ops_bound,
            "within_bound": self.within_bound,
            "shifts": self.shifts,
            "merges": self.merges,
        }


@dataclass
class BenchReport:
    rows: List[BenchRow] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(row.within_bound for row in self.rows)

    def to_dict(self) -> dict:
        return {"ok": self.ok, "rows": [row.to_dict() for row in self.rows]}


def bench_spec(n: int, family: Family, seed: int) -> GenSpec:
    """The instance a benchmark cell runs on; density keeps Phase 2 busy on every family."""
    return GenSpec(seed=seed, n=n, coord_range=max(1, n * BENCH_DELTA // 2), delta=BENCH_DELTA, family=family)


def bench(sizes: Sequence[int], families: Sequence[Family], seed: int = config.DEFAULT_SEED,
          include_naive: bool = False, repeats: int = config.BENCH_REPEATS, progress: bool = False) -> BenchReport:
    report = BenchReport()
    cells = [(Family(f), n) for f in families for n in sizes]
    for family, n in tqdm(cells, desc="bench", disable=not progress):
        spec = bench_spec(n, family, seed)
        inst = gen_instance(spec)
        result = solve(inst)
        fast = _median_time(lambda: solve(inst), repeats)

        naive = None
        if include_naive:
            if n <= config.BENCH_NAIVE_MAX_N:
                naive = _median_time(lambda: naive_quadratic_solve(inst), repeats)
            else:
                logger.warning(f"skipping naive timing at n={n} (above {config.BENCH_NAIVE_MAX_N})")

        counters = result.counters
        row = BenchRow(n, family.value, spec, fast, naive, counters.heap_ops, counters.shifts, counters.merges)
        logger.info(f"bench {family.value} n={n}: fast={fast:.4f}s heap_ops={counters.heap_ops}")
        report.rows.append(row)
    return report
