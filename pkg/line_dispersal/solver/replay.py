"""Rebuilds a final configuration from a solver trace, with explicit per-point positions."""
from __future__ import annotations

from typing import Iterable, List

from ..core.model import Configuration, ProblemInstance
from ..errors import InstanceFormatError
from .types import EVENT_KINDS, JOIN_CHAIN, MERGE, NEW_CHAIN, PLACE_APPENDED, PLACE_INITIAL, SHIFT, TraceEvent


def replay_trace(inst: ProblemInstance, events: Iterable[TraceEvent]) -> Configuration:
    positions: List[int] = []
    starts: List[int] = []  # chain start indices, left to right

    for event in events:
        if event.kind not in EVENT_KINDS:
            raise InstanceFormatError(f"unknown trace event kind {event.kind!r}")
        if event.kind in (PLACE_INITIAL, PLACE_APPENDED) and event.iter >= inst.n:
            raise InstanceFormatError(f"trace places point {event.iter} but the instance has {inst.n}")
        if event.kind == PLACE_INITIAL:
            if event.iter != len(positions):
                raise InstanceFormatError(f"trace places point {event.iter} out of order")
            positions.append(inst.initial[event.iter])
        elif event.kind == PLACE_APPENDED:
            if event.iter != len(positions) or not positions:
                raise InstanceFormatError(f"trace appends point {event.iter} out of order")
            positions.append(positions[-1] + inst.delta)
        elif event.kind == NEW_CHAIN:
            starts.append(event.chain_start)
        elif event.kind == JOIN_CHAIN:
            if not starts or starts[-1] != event.chain_start:
                raise InstanceFormatError(f"trace joins unknown chain {event.chain_start}")
        elif event.kind == SHIFT:
            if event.amount is None:
                raise InstanceFormatError(f"shift at iteration {event.iter} has no amount")
            for j in range(event.chain_start, len(positions)):
                positions[j] -= event.amount.value
        elif event.kind == MERGE:
            if len(starts) < 2 or starts[-1] != event.merged_with_start or starts[-2] != event.chain_start:
                raise InstanceFormatError(f"trace merges chains that are not adjacent at iteration {event.iter}")
            starts.pop()

    if len(positions) != inst.n:
        raise InstanceFormatError(f"trace places {len(positions)} of {inst.n} points")
    return Configuration(tuple(positions), inst.scale)
