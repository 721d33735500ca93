"""Maximal-chain partitioning of independent configurations."""
from __future__ import annotations

from dataclasses import dataclass
from typing import List

from ..errors import LengthMismatchError, NotIndependentError
from .model import Configuration, ProblemInstance


@dataclass(frozen=True)
class ChainView:
    """A maximal run [start, end] of points spaced exactly delta apart.

    cnt_l / cnt_o / cnt_r count the members currently left of, on, and right
    of their initial positions.
    """

    start: int
    end: int
    cnt_l: int
    cnt_o: int
    cnt_r: int

    @property
    def size(self) -> int:
        return self.end - self.start + 1

    @property
    def left_slope(self) -> int:
        """Cost change per unit when the whole chain moves left."""
        return self.cnt_l + self.cnt_o - self.cnt_r

    @property
    def right_slope(self) -> int:
        """Cost change per unit when the whole chain moves right."""
        return self.cnt_o + self.cnt_r - self.cnt_l

    def to_dict(self) -> dict:
        return {"start": self.start, "end": self.end, "L": self.cnt_l, "O": self.cnt_o, "R": self.cnt_r}


def decompose_chains(inst: ProblemInstance, cfg: Configuration) -> List[ChainView]:
    """Partitions an independent configuration into maximal chains, left to right."""
    if len(cfg.positions) != inst.n:
        raise LengthMismatchError(f"configuration has {len(cfg.positions)} positions, instance has {inst.n}")
    if not cfg.is_independent(inst.delta):
        raise NotIndependentError("configuration is not independent")

    pos, init, delta = cfg.positions, inst.initial, inst.delta
    chains: List[ChainView] = []
    start = 0
    counts = [0, 0, 0]
    for i in range(inst.n):
        if i > start and pos[i] - pos[i - 1] != delta:
            chains.append(ChainView(start, i - 1, *counts))
            start, counts = i, [0, 0, 0]
        if pos[i] < init[i]:
            counts[0] += 1
        elif pos[i] == init[i]:
            counts[1] += 1
        else:
            counts[2] += 1
    if inst.n:
        chains.append(ChainView(start, inst.n - 1, *counts))
    return chains
