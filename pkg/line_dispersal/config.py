import logging
import os
from typing import Optional

# --- Reproducibility ---
# Every `--seed` default in the CLI and every harness entry point falls back to this value.
DEFAULT_SEED = int(os.getenv("LINE_DISPERSAL_SEED", "20240917"))

# --- Exact Arithmetic ---
MAX_FRACTION_DIGITS = 18  # 10^18 denominator cap
VALUE_BITS = 127  # |scaled value| < 2**127, i.e. a signed 128-bit accumulator

# --- Solver / Oracle Bounds ---
EXHAUSTIVE_MAX_N = 14  # 2^(n-1) partitions
HEAP_OPS_FACTOR = 4  # heap_ops <= 4 * n * log2(n + 2)
HEAP_COMPARISON_FACTOR = 3  # comparisons <= 3 * m * log2(m + 2) over m heap operations

# --- Harness ---
BENCH_REPEATS = 3  # wall times are median-of-3
BENCH_NAIVE_MAX_N = 20000  # naive timings are skipped above this size
VERIFY_WORKERS = int(os.getenv("LINE_DISPERSAL_WORKERS", "1"))

# --- Logging ---
LOG_LEVEL = os.getenv("LINE_DISPERSAL_LOG_LEVEL", "WARNING")
LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


def setup_logging(level: Optional[str] = None) -> None:
    """Configures stderr logging. stdout stays reserved for results."""
    name = (level or LOG_LEVEL).upper()
    if not isinstance(logging.getLevelName(name), int):
        raise ValueError(f"unknown logging level {name!r}")
    logging.basicConfig(level=name, format=LOG_FORMAT)
