"""Exception hierarchy shared by every line_dispersal module."""


class DispersalError(Exception):
    """Base class for all errors raised by this package."""


# --- Scalars ---

class ScalarParseError(DispersalError, ValueError):
    """A decimal literal could not be parsed."""


class ScaleBoundError(ScalarParseError):
    """A literal carries more fractional digits than the supported denominator."""


class ScalarOverflowError(DispersalError, OverflowError):
    """A scaled value left the supported magnitude range."""


class ScaleMismatchError(DispersalError, ValueError):
    """Arithmetic between scalars of different scales."""


# --- Instances and configurations ---

class InstanceError(DispersalError, ValueError):
    """A problem instance violates its construction invariants."""


class LengthMismatchError(InstanceError):
    """A configuration does not have one position per point."""


class NotIndependentError(DispersalError, ValueError):
    """A configuration has two consecutive points closer than delta."""


class InstanceFormatError(DispersalError, ValueError):
    """An instance, positions or trace file could not be read."""


# --- Algorithms ---

class EmptyHeapError(DispersalError, IndexError):
    """find_min or extract_min on an empty heap."""


class InvariantBreachError(DispersalError, RuntimeError):
    """The solver detected a violated internal invariant (an implementation bug)."""


class InstanceTooLargeError(DispersalError, ValueError):
    """The exhaustive oracle was asked to enumerate an instance above its size limit."""


class GenSpecError(DispersalError, ValueError):
    """An invalid generator specification or harness precondition."""
