from .types import LiveChain, SolveResult, SolverCounters, TraceEvent
from .engine import SolverState, insert_point, merge_chains, restore_property, shift_chain, solve
from .replay import replay_trace
