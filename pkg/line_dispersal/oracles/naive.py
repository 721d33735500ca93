"""Quadratic reference implementation of the insertion algorithm.

Same decisions as ``solver.engine`` but with explicit per-point positions,
chains as plain index lists, L/O/R recounted by scanning, alpha found by a
linear scan and every shift applied point by point.
"""
from __future__ import annotations

from typing import List

from ..core.model import Configuration, ProblemInstance, total_cost
from .result import OracleResult


def naive_quadratic_solve(inst: ProblemInstance) -> OracleResult:
    init, delta = inst.initial, inst.delta
    pos: List[int] = []
    chains: List[List[int]] = []

    for i, x in enumerate(init):
        # Phase 1
        if not pos or x - pos[-1] > delta:
            pos.append(x)
            chains.append([i])
            continue
        if x - pos[-1] == delta:
            pos.append(x)
            chains[-1].append(i)
            continue
        pos.append(pos[-1] + delta)
        chains[-1].append(i)

        # Phase 2
        chain = chains[-1]
        held = sum(1 for j in chain if pos[j] <= init[j])
        right = [pos[j] - init[j] for j in chain if pos[j] > init[j]]
        if len(right) < held:
            continue
        alpha = min(right)
        if len(chains) == 1:
            shift = alpha
        else:
            beta = pos[chain[0]] - pos[chains[-2][-1]] - delta
            shift = alpha if alpha < beta else beta
        for j in chain:
            pos[j] -= shift
        if len(chains) > 1 and pos[chain[0]] - pos[chains[-2][-1]] == delta:
            chains[-2].extend(chains.pop())

    witness = Configuration(tuple(pos), inst.scale)
    return OracleResult(total_cost(inst, witness), witness)
