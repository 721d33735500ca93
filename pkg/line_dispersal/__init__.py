# line_dispersal/__init__.py

# Expose key classes or functions from submodules
from .core import (
    AuditReport,
    ChainView,
    Configuration,
    ProblemInstance,
    ScaledInt,
    audit,
    decompose_chains,
    format_scalar,
    normalize_instance,
    parse_scalar,
    total_cost,
)
from .heap import MeldHeap
from .solver import SolveResult, TraceEvent, replay_trace, solve
from .oracles import (
    OracleResult,
    exhaustive_anchored_solve,
    naive_quadratic_solve,
    pav_isotonic_solve,
)
from .harness import BenchReport, Family, GenSpec, VerifyReport, bench, gen_instance, verify_batch

__version__ = "0.1.0"
