"""Exact fixed-point scalars.

A ScaledInt stores an integer numerator over a power-of-ten denominator (the
scale). All coordinates of one problem instance share one scale, so every
quantity the solver derives (positions, slacks, shifts, costs) is again an
integer on that grid and no rounding ever happens.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from .. import config
from ..errors import ScalarOverflowError, ScalarParseError, ScaleBoundError, ScaleMismatchError

_LITERAL = re.compile(r"^([+-]?)(\d+)(?:\.(\d+))?$")
_LIMIT = 1 << config.VALUE_BITS


def check_magnitude(value: int) -> int:
    """Returns value unchanged, or raises ScalarOverflowError outside the supported range."""
    if -_LIMIT < value < _LIMIT:
        return value
    raise ScalarOverflowError(f"scaled value needs more than {config.VALUE_BITS} bits")


def scale_digits(scale: int) -> int:
    """Number of fractional digits represented by a power-of-ten scale."""
    return len(str(scale)) - 1


def rescale(value: int, scale: int, new_scale: int) -> int:
    """Moves value from scale to a finer (or equal) power-of-ten scale."""
    if new_scale % scale:
        raise ScaleMismatchError(f"cannot rescale 1/{scale} to 1/{new_scale} exactly")
    return check_magnitude(value * (new_scale // scale))


def format_scalar(value: int, scale: int) -> str:
    """Canonical decimal text of value / scale: no '+', no trailing fractional zeros."""
    sign = "-" if value < 0 else ""
    whole, frac = divmod(abs(value), scale)
    if frac == 0:
        return f"{sign}{whole}"
    frac_text = str(frac).rjust(scale_digits(scale), "0").rstrip("0")
    return f"{sign}{whole}.{frac_text}"


@dataclass(frozen=True)
class ScaledInt:
    """Exact decimal value ``value / scale``.

    Arithmetic and comparison are only defined between scalars of the same
    scale; mixing scales raises ScaleMismatchError instead of silently
    rounding. Results outside ``config.VALUE_BITS`` raise ScalarOverflowError.
    """

    value: int
    scale: int = 1

    def __post_init__(self):
        check_magnitude(self.value)

    def rescale(self, new_scale: int) -> ScaledInt:
        return ScaledInt(rescale(self.value, self.scale, new_scale), new_scale)

    def _coerce_other(self, other: Union[ScaledInt, int]) -> int:
        if isinstance(other, ScaledInt):
            if other.scale != self.scale:
                raise ScaleMismatchError(f"scales differ: 1/{self.scale} vs 1/{other.scale}")
            return other.value
        if isinstance(other, int) and other == 0:
            return 0  # lets sum() start from 0
        return NotImplemented

    def __add__(self, other):
        rhs = self._coerce_other(other)
        if rhs is NotImplemented:
            return NotImplemented
        return ScaledInt(check_magnitude(self.value + rhs), self.scale)

    __radd__ = __add__

    def __sub__(self, other):
        rhs = self._coerce_other(other)
        if rhs is NotImplemented:
            return NotImplemented
        return ScaledInt(check_magnitude(self.value - rhs), self.scale)

    def __neg__(self) -> ScaledInt:
        return ScaledInt(-self.value, self.scale)

    def __abs__(self) -> ScaledInt:
        return ScaledInt(abs(self.value), self.scale)

    def __lt__(self, other):
        rhs = self._coerce_other(other)
        return NotImplemented if rhs is NotImplemented else self.value < rhs

    def __le__(self, other):
        rhs = self._coerce_other(other)
        return NotImplemented if rhs is NotImplemented else self.value <= rhs

    def __gt__(self, other):
        rhs = self._coerce_other(other)
        return NotImplemented if rhs is NotImplemented else self.value > rhs

    def __ge__(self, other):
        rhs = self._coerce_other(other)
        return NotImplemented if rhs is NotImplemented else self.value >= rhs

    def __str__(self) -> str:
        return format_scalar(self.value, self.scale)


def parse_scalar(text: str) -> ScaledInt:
    """Parses a decimal literal into a ScaledInt at the literal's own scale.

    "2.50" -> 250 / 100, "-3.125" -> -3125 / 1000, "0" -> 0 / 1. The scale
    records how many fractional digits the literal carries, so callers can
    unify a batch of literals at the maximum.
    """
    match = _LITERAL.match(text.strip()) if isinstance(text, str) else None
    if match is None:
        raise ScalarParseError(f"malformed decimal literal: {text!r}")
    sign, whole, frac = match.groups()
    frac = frac or ""
    if len(frac) > config.MAX_FRACTION_DIGITS:
        raise ScaleBoundError(
            f"{text!r} has {len(frac)} fractional digits; at most {config.MAX_FRACTION_DIGITS} are supported"
        )
    value = int(whole + frac)
    return ScaledInt(check_magnitude(-value if sign == "-" else value), 10 ** len(frac))
