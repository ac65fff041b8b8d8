"""Exception types raised by hyperstretch services."""
from typing import Sequence, Tuple


class HyperstretchError(ValueError):
    """Base class for input and precondition errors (CLI exit code 1)."""


class DegenerateIsometryError(HyperstretchError):
    """Matrix with zero determinant."""


class PreconditionError(HyperstretchError):
    """Operation called on input outside its domain (e.g. axis of a parabolic)."""


class CapExceededError(HyperstretchError):
    """Requested size exceeds a configured cap."""


class InvalidWeightsError(HyperstretchError):
    """Weights negative or not summing to one."""


class DomainError(HyperstretchError):
    """Point outside the chart or domain of a map."""


class PayloadError(HyperstretchError):
    """Malformed JSON payload on the command line."""


class DegenerateInputError(HyperstretchError):
    """Point set violating general position."""

    def __init__(self, message: str, indices: Sequence[int] = ()):
        super().__init__(message)
        self.indices: Tuple[int, ...] = tuple(indices)


class CheckFailedError(AssertionError):
    """An internal invariant check failed (CLI exit code 2)."""
