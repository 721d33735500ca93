"""O(n log n) solver for movement to independence on a line, total-sum measure.

Points are inserted left to right. Inserting point i either lands it at its
initial position (opening a new chain or extending the last one when the gap
is exactly delta) or appends it at ``pos(i-1) + delta`` as a right-displaced
member of the last chain. An appended point can tie |R| with |L| + |O| in that
chain; the tie is resolved by shifting the chain left by the smallest R slack
(alpha) or, if the previous chain is reached first (beta), by shifting beta
and merging the two chains.

Chains are stored affinely (``position(i) = base + i * delta``), so a shift is
a single subtraction and two adjacent chains touch exactly when their bases
are equal.
"""
from __future__ import annotations

import logging
from typing import List, Optional

from ..core.audit import audit
from ..core.chains import decompose_chains
from ..core.model import Configuration, ProblemInstance, check_instance_bounds, total_cost
from ..core.scalar import ScaledInt
from ..errors import InvariantBreachError
from .types import (
    JOIN_CHAIN,
    MERGE,
    NEW_CHAIN,
    PLACE_APPENDED,
    PLACE_INITIAL,
    SHIFT,
    LiveChain,
    SolveResult,
    SolverCounters,
    TraceEvent,
)

logger = logging.getLogger(__name__)


class SolverState:
    """Chain stack and bookkeeping of one solve call."""

    def __init__(self, inst: ProblemInstance, want_trace: bool = False):
        self.inst = inst
        self.delta = inst.delta
        self.initial = inst.initial
        self.chains: List[LiveChain] = []
        self.counters = SolverCounters()
        self.trace: Optional[List[TraceEvent]] = [] if want_trace else None
        self.current = 0

    def record(self, kind: str, chain_start: int, amount: Optional[int] = None,
               merged_with_start: Optional[int] = None) -> None:
        if self.trace is not None:
            scaled = None if amount is None else ScaledInt(amount, self.inst.scale)
            self.trace.append(TraceEvent(self.current, kind, chain_start, scaled, merged_with_start))

    def positions(self) -> List[int]:
        delta = self.delta
        out: List[int] = []
        for chain in self.chains:
            out.extend(chain.base + i * delta for i in range(chain.start, chain.end + 1))
        return out


def insert_point(state: SolverState, i: int) -> bool:
    """Phase 1: places point i. Returns True when Property 1 of the last chain now fails."""
    state.current = i
    z = state.initial[i] - i * state.delta  # base that would leave point i stationary
    chains = state.chains

    if not chains or z > chains[-1].base:
        chains.append(LiveChain(start=i, end=i, base=z, cnt_o=1))
        state.record(PLACE_INITIAL, i)
        state.record(NEW_CHAIN, i)
        return False

    last = chains[-1]
    last.end = i
    if z == last.base:
        last.cnt_o += 1
        state.record(PLACE_INITIAL, last.start)
        state.record(JOIN_CHAIN, last.start)
        return False

    last.heap_r.insert(-z)
    state.counters.heap_ops += 1
    state.record(PLACE_APPENDED, last.start)
    held = last.cnt_l + last.cnt_o
    if last.cnt_r > held:
        raise InvariantBreachError(f"chain at {last.start}: |R|={last.cnt_r} exceeds |L|+|O|={held}")
    return last.cnt_r == held


def settle_stationary(state: SolverState, chain: LiveChain) -> int:
    """Moves every R member whose slack reached zero into O. Returns how many moved."""
    heap = chain.heap_r
    popped = 0
    while heap:
        state.counters.heap_ops += 1
        slack = heap.find_min() + chain.base
        if slack > 0:
            break
        if slack < 0:
            raise InvariantBreachError(f"chain at {chain.start}: R member crossed its initial position")
        heap.extract_min()
        state.counters.heap_ops += 1
        chain.cnt_o += 1
        popped += 1
    return popped


def shift_chain(state: SolverState, chain: LiveChain, t: int, settle: bool = True) -> None:
    """Shifts chain left by t; former O members become L, zero-slack R members become O."""
    if t <= 0:
        raise InvariantBreachError(f"chain at {chain.start}: non-positive shift {t}")
    if chain.heap_r:
        state.counters.heap_ops += 1
        if chain.heap_r.find_min() + chain.base < t:
            raise InvariantBreachError(f"chain at {chain.start}: shift {t} exceeds the minimum slack")
    chain.base -= t
    chain.shift_total += t
    chain.cnt_l += chain.cnt_o
    chain.cnt_o = 0
    state.counters.shifts += 1
    state.record(SHIFT, chain.start, amount=t)
    if settle:
        settle_stationary(state, chain)


def merge_chains(state: SolverState, left: LiveChain, right: LiveChain) -> LiveChain:
    """Joins two touching chains (equal bases, contiguous indices) into one."""
    if right.start != left.end + 1 or right.base != left.base:
        raise InvariantBreachError(f"chains at {left.start} and {right.start} do not touch")
    left.heap_r.meld(right.heap_r)
    state.counters.heap_ops += 1
    state.counters.merges += 1
    state.record(MERGE, left.start, merged_with_start=right.start)
    return LiveChain(
        start=left.start,
        end=right.end,
        base=left.base,
        cnt_l=left.cnt_l + right.cnt_l,
        cnt_o=left.cnt_o + right.cnt_o,
        heap_r=left.heap_r,
        shift_total=left.shift_total,
    )


def restore_property(state: SolverState) -> None:
    """Phase 2: restores |L| + |O| > |R| on the last chain in a single step."""
    chains = state.chains
    chain = chains[-1]
    if chain.cnt_r != chain.cnt_l + chain.cnt_o:
        raise InvariantBreachError(f"chain at {chain.start}: restore called without the |R| = |L| + |O| tie")

    state.counters.heap_ops += 1
    alpha = chain.heap_r.find_min() + chain.base
    beta = chain.base - chains[-2].base if len(chains) > 1 else None  # None: no left neighbour

    if beta is None or alpha < beta:
        shift_chain(state, chain, alpha)
        merged = chain
    else:
        shift_chain(state, chain, beta, settle=False)
        left = chains[-2]
        merged = merge_chains(state, left, chain)
        chains[-2:] = [merged]
        settle_stationary(state, merged)

    if merged.cnt_l + merged.cnt_o <= merged.cnt_r:
        raise InvariantBreachError(f"chain at {merged.start}: Property 1 still fails after restore")


def _audit_iteration(state: SolverState, i: int) -> None:
    prefix = state.inst.prefix(i + 1)
    cfg = Configuration(tuple(state.positions()), state.inst.scale)
    report = audit(prefix, cfg)
    if not report.ok:
        raise InvariantBreachError(f"iteration {i}: audit failed: {report.to_dict()}")

    views = decompose_chains(prefix, cfg)
    live = [(c.start, c.end, c.cnt_l, c.cnt_o, c.cnt_r) for c in state.chains]
    seen = [(v.start, v.end, v.cnt_l, v.cnt_o, v.cnt_r) for v in views]
    if live != seen:
        raise InvariantBreachError(f"iteration {i}: live chains {live} disagree with partition {seen}")
    bases = [c.base for c in state.chains]
    if any(a >= b for a, b in zip(bases, bases[1:])):
        raise InvariantBreachError(f"iteration {i}: chain bases not strictly increasing")
    for c in state.chains:
        if c.heap_r and c.heap_r.find_min() + c.base <= 0:
            raise InvariantBreachError(f"iteration {i}: chain at {c.start} holds a non-positive slack")


def solve(inst: ProblemInstance, want_trace: bool = False, debug_audit: bool = False) -> SolveResult:
    """Computes the optimal independent configuration of inst."""
    check_instance_bounds(inst.initial, inst.delta)
    state = SolverState(inst, want_trace)
    for i in range(inst.n):
        state.counters.iterations += 1
        if insert_point(state, i):
            restore_property(state)
        if debug_audit:
            _audit_iteration(state, i)

    cfg = Configuration(tuple(state.positions()), inst.scale)
    cost = total_cost(inst, cfg)
    logger.debug(
        f"solved n={inst.n}: cost={cost} chains={len(state.chains)} counters={state.counters.to_dict()}"
    )
    trace = tuple(state.trace) if state.trace is not None else None
    return SolveResult(inst, cfg, cost, state.counters, trace)
