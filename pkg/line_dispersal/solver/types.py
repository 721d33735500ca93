"""Solver state records: live chains, counters, trace events and results."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from ..core.model import Configuration, ProblemInstance
from ..core.scalar import ScaledInt, format_scalar, parse_scalar, rescale
from ..heap import MeldHeap

# Trace event kinds
PLACE_INITIAL = "place_initial"
PLACE_APPENDED = "place_appended"
NEW_CHAIN = "new_chain"
JOIN_CHAIN = "join_chain"
SHIFT = "shift"
MERGE = "merge"
EVENT_KINDS = (PLACE_INITIAL, PLACE_APPENDED, NEW_CHAIN, JOIN_CHAIN, SHIFT, MERGE)


@dataclass(slots=True)
class LiveChain:
    """A chain under construction, encoded affinely.

    The point at index i sits at ``base + i * delta``. heap_r holds
    ``v_i = i * delta - initial[i]`` for every right-displaced member, so that
    member's slack is ``v_i + base``; keys of adjacent chains stay comparable
    once their bases are equal. shift_total is the cumulative leftward shift
    since creation, kept for the trace only.
    """

    start: int
    end: int
    base: int
    cnt_l: int = 0
    cnt_o: int = 0
    heap_r: MeldHeap = field(default_factory=MeldHeap)
    shift_total: int = 0

    @property
    def cnt_r(self) -> int:
        return len(self.heap_r)


@dataclass
class SolverCounters:
    heap_ops: int = 0
    shifts: int = 0
    merges: int = 0
    iterations: int = 0

    def to_dict(self) -> dict:
        return {"heap_ops": self.heap_ops, "shifts": self.shifts, "merges": self.merges, "iterations": self.iterations}


@dataclass(frozen=True)
class TraceEvent:
    """One place / chain / shift / merge action. Indices are sorted indices."""

    iter: int
    kind: str
    chain_start: int
    amount: Optional[ScaledInt] = None
    merged_with_start: Optional[int] = None

    def to_dict(self) -> dict:
        return {
            "iter": self.iter,
            "kind": self.kind,
            "chain_start": self.chain_start,
            "amount": None if self.amount is None else str(self.amount),
            "merged_with_start": self.merged_with_start,
        }

    @classmethod
    def from_dict(cls, record: dict, scale: int) -> TraceEvent:
        amount = record.get("amount")
        if amount is not None:
            parsed = parse_scalar(amount)
            amount = ScaledInt(rescale(parsed.value, parsed.scale, scale), scale)
        return cls(
            iter=int(record["iter"]),
            kind=str(record["kind"]),
            chain_start=int(record["chain_start"]),
            amount=amount,
            merged_with_start=record.get("merged_with_start"),
        )


@dataclass(frozen=True)
class SolveResult:
    instance: ProblemInstance
    configuration: Configuration
    total_cost: ScaledInt
    counters: SolverCounters
    trace: Optional[Tuple[TraceEvent, ...]] = None

    def positions_in_input_order(self) -> List[str]:
        scale = self.configuration.scale
        return [format_scalar(p, scale) for p in self.instance.to_input_order(self.configuration.positions)]

    def displacements_in_input_order(self) -> List[str]:
        scale = self.configuration.scale
        moves = [p - x for p, x in zip(self.configuration.positions, self.instance.initial)]
        return [format_scalar(d, scale) for d in self.instance.to_input_order(moves)]
