"""Problem instances, configurations and the total-sum objective."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

from .. import config
from ..errors import InstanceError, LengthMismatchError, ScalarOverflowError, ScaleMismatchError
from .scalar import ScaledInt, check_magnitude, format_scalar, parse_scalar, rescale


@dataclass(frozen=True)
class ProblemInstance:
    """delta and the sorted initial configuration I, as integers over one shared scale.

    ``perm[i]`` is the original input index of the point stored at sorted
    index ``i``. Ties in the input keep their input order.
    """

    delta: int
    initial: Tuple[int, ...]
    perm: Tuple[int, ...]
    scale: int = 1

    def __post_init__(self):
        if self.delta <= 0:
            raise InstanceError(f"delta must be positive, got {format_scalar(self.delta, self.scale)}")
        if len(self.perm) != len(self.initial) or sorted(self.perm) != list(range(len(self.initial))):
            raise InstanceError("perm is not a permutation of the point indices")
        if any(a > b for a, b in zip(self.initial, self.initial[1:])):
            raise InstanceError("initial positions must be sorted non-decreasing")
        check_instance_bounds(self.initial, self.delta)

    @classmethod
    def from_values(cls, values: Iterable[int], delta: int, scale: int = 1) -> ProblemInstance:
        """Builds an instance from already-scaled integers in input order."""
        values = [int(v) for v in values]
        order = sorted(range(len(values)), key=values.__getitem__)  # stable
        return cls(int(delta), tuple(values[k] for k in order), tuple(order), scale)

    @property
    def n(self) -> int:
        return len(self.initial)

    @property
    def delta_scalar(self) -> ScaledInt:
        return ScaledInt(self.delta, self.scale)

    def position(self, i: int) -> ScaledInt:
        return ScaledInt(self.initial[i], self.scale)

    def prefix(self, k: int) -> ProblemInstance:
        """The instance made of the first k sorted points."""
        order = sorted(range(k), key=self.perm.__getitem__)
        rank = {old: new for new, old in enumerate(order)}
        return ProblemInstance(self.delta, self.initial[:k], tuple(rank[i] for i in range(k)), self.scale)

    def at_scale(self, new_scale: int) -> ProblemInstance:
        """The same instance on a finer (or equal) power-of-ten grid."""
        if new_scale == self.scale:
            return self
        return ProblemInstance(
            rescale(self.delta, self.scale, new_scale),
            tuple(rescale(x, self.scale, new_scale) for x in self.initial),
            self.perm,
            new_scale,
        )

    def from_input_order(self, values: Sequence) -> List:
        """Maps a sequence in original input order to sorted-index order."""
        return [values[original] for original in self.perm]

    def to_input_order(self, values: Sequence) -> List:
        """Maps a sequence indexed by sorted index back to original input order."""
        out = [None] * len(values)
        for i, original in enumerate(self.perm):
            out[original] = values[i]
        return out


@dataclass(frozen=True)
class Configuration:
    """One position per point, indexed identically to ProblemInstance.initial."""

    positions: Tuple[int, ...]
    scale: int = 1

    def __len__(self) -> int:
        return len(self.positions)

    def position(self, i: int) -> ScaledInt:
        return ScaledInt(self.positions[i], self.scale)

    def is_independent(self, delta: int) -> bool:
        p = self.positions
        return all(p[i + 1] - p[i] >= delta for i in range(len(p) - 1))


def check_instance_bounds(initial: Sequence[int], delta: int) -> None:
    """Rejects instances whose worst-case cost accumulator would leave VALUE_BITS.

    Every position the solver or an oracle produces lies within
    ``max|initial| + n * delta`` of the origin, so each displacement is at
    most twice that and the total cost at most n times more.
    """
    n = len(initial)
    reach = max((abs(x) for x in initial), default=0) + n * delta
    if (n + 1) * 2 * reach >= 1 << config.VALUE_BITS:
        raise ScalarOverflowError(
            f"instance with n={n} exceeds the {config.VALUE_BITS}-bit accumulator at this scale"
        )


def normalize_instance(raw_positions: Sequence[str], delta: str) -> ProblemInstance:
    """Parses decimal strings, unifies their scale and sorts the points stably."""
    parsed_delta = parse_scalar(delta)
    parsed = [parse_scalar(text) for text in raw_positions]
    scale = max([parsed_delta.scale] + [p.scale for p in parsed])
    delta_value = rescale(parsed_delta.value, parsed_delta.scale, scale)
    if delta_value <= 0:
        raise InstanceError(f"delta must be positive, got {delta!r}")
    values = [rescale(p.value, p.scale, scale) for p in parsed]
    return ProblemInstance.from_values(values, delta_value, scale)


def total_cost(inst: ProblemInstance, cfg: Configuration) -> ScaledInt:
    """Exact total displacement sum |cfg[i] - initial[i]|."""
    if len(cfg.positions) != inst.n:
        raise LengthMismatchError(f"configuration has {len(cfg.positions)} positions, instance has {inst.n}")
    if cfg.scale != inst.scale:
        raise ScaleMismatchError(f"configuration scale 1/{cfg.scale} differs from instance scale 1/{inst.scale}")
    cost = sum(abs(p - x) for p, x in zip(cfg.positions, inst.initial))
    return ScaledInt(check_magnitude(cost), inst.scale)
