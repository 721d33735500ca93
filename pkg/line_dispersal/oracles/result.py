from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Tuple

from ..core.model import Configuration
from ..core.scalar import ScaledInt


@dataclass(frozen=True)
class OracleResult:
    best_cost: ScaledInt
    witness: Configuration
    all_optima: Optional[Tuple[Configuration, ...]] = None  # exhaustive oracle only


def check_pointwise_minimal(cfg: Configuration, optima: Iterable[Configuration]) -> bool:
    """True iff cfg lies at or left of every given configuration, coordinate by coordinate."""
    return all(
        all(p <= q for p, q in zip(cfg.positions, other.positions))
        for other in optima
    )
