"""Exhaustive anchored oracle for small instances.

Every optimal chain can be assumed to hold a stationary point, so an optimum
is a partition of the points into consecutive segments, each pinned so that
one member sits at its initial position. A segment [a, b] pinned at base m
places point i at ``m + i * delta`` and costs the sum of ``|m - z_i|`` with
``z_i = initial[i] - i * delta``; the cheapest anchors are the members whose
z is a median of the segment. Adjacent segments are independent iff their
bases do not decrease, which is checked while enumerating.
"""
from __future__ import annotations

from typing import Dict, List, Set, Tuple

from .. import config
from ..core.model import Configuration, ProblemInstance
from ..core.scalar import ScaledInt
from ..errors import InstanceTooLargeError
from .result import OracleResult


def _segment_anchors(z: List[int]) -> Dict[Tuple[int, int], Tuple[int, List[int]]]:
    """For every segment [a, b]: (minimal cost, distinct anchor bases attaining it)."""
    table = {}
    n = len(z)
    for a in range(n):
        for b in range(a, n):
            segment = z[a:b + 1]
            costs = {m: sum(abs(m - v) for v in segment) for m in set(segment)}
            best = min(costs.values())
            table[a, b] = (best, sorted(m for m, c in costs.items() if c == best))
    return table


def exhaustive_anchored_solve(inst: ProblemInstance) -> OracleResult:
    n, delta = inst.n, inst.delta
    if n > config.EXHAUSTIVE_MAX_N:
        raise InstanceTooLargeError(f"exhaustive oracle supports n <= {config.EXHAUSTIVE_MAX_N}, got {n}")

    z = [x - i * delta for i, x in enumerate(inst.initial)]
    table = _segment_anchors(z)
    best_cost = None
    optima: Set[Tuple[int, ...]] = set()
    bases: List[Tuple[int, int, int]] = []  # (start, end, base) of the current partial partition

    def emit() -> None:
        positions = [0] * n
        for a, b, m in bases:
            for i in range(a, b + 1):
                positions[i] = m + i * delta
        optima.add(tuple(positions))

    def extend(start: int, floor, cost: int) -> None:
        nonlocal best_cost
        if best_cost is not None and cost > best_cost:
            return
        if start == n:
            if best_cost is None or cost < best_cost:
                best_cost = cost
                optima.clear()
            emit()
            return
        for end in range(start, n):
            seg_cost, anchors = table[start, end]
            for m in anchors:
                if floor is not None and m < floor:
                    continue
                bases.append((start, end, m))
                extend(end + 1, m, cost + seg_cost)
                bases.pop()

    extend(0, None, 0)
    if best_cost is None:  # n == 0
        best_cost = 0
        optima.add(())

    configs = tuple(Configuration(p, inst.scale) for p in sorted(optima))
    return OracleResult(ScaledInt(best_cost, inst.scale), configs[0], configs)
