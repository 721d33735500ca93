"""Isotonic-regression oracle.

An order-preserving configuration is independent iff ``z_i = pos_i - i * delta``
is non-decreasing, and its cost is the L1 distance between z and the
transformed initial positions ``initial[i] - i * delta``. So the optimum is an
L1 isotonic fit, computed here by pool-adjacent-violators with lower block
medians. Each block keeps its values in two heaps (lower half as a max-heap,
upper half as a min-heap); pooled blocks merge small-into-large.
"""
from __future__ import annotations

import heapq
from typing import List

from ..core.model import Configuration, ProblemInstance, total_cost
from .result import OracleResult


class _Block:
    __slots__ = ("start", "end", "low", "high")

    def __init__(self, start: int, value: int):
        self.start = start
        self.end = start
        self.low = [-value]  # max-heap, holds the ceil(k/2) smallest values
        self.high: List[int] = []

    def __len__(self) -> int:
        return len(self.low) + len(self.high)

    @property
    def median(self) -> int:
        return -self.low[0]

    def _push(self, value: int) -> None:
        if self.low and value > -self.low[0]:
            heapq.heappush(self.high, value)
        else:
            heapq.heappush(self.low, -value)
        if len(self.low) > len(self.high) + 1:
            heapq.heappush(self.high, -heapq.heappop(self.low))
        elif len(self.low) < len(self.high):
            heapq.heappush(self.low, -heapq.heappop(self.high))

    def values(self) -> List[int]:
        return [-v for v in self.low] + self.high

    def absorb(self, other: _Block) -> _Block:
        """Pools other (adjacent, to the right) into the larger of the two blocks."""
        big, small = (self, other) if len(self) >= len(other) else (other, self)
        for value in small.values():
            big._push(value)
        big.start, big.end = self.start, other.end
        return big


def pav_isotonic_solve(inst: ProblemInstance) -> OracleResult:
    delta = inst.delta
    blocks: List[_Block] = []
    for i, x in enumerate(inst.initial):
        blocks.append(_Block(i, x - i * delta))
        while len(blocks) > 1 and blocks[-2].median > blocks[-1].median:
            right = blocks.pop()
            blocks[-1] = blocks[-1].absorb(right)

    positions = [0] * inst.n
    for block in blocks:
        m = block.median
        for i in range(block.start, block.end + 1):
            positions[i] = m + i * delta
    witness = Configuration(tuple(positions), inst.scale)
    return OracleResult(total_cost(inst, witness), witness)
