"""Exception hierarchy.

Every input-side error carries the process exit code the CLI uses for it.
Verification failures are not exceptions; they are reported as witnesses.
"""

from __future__ import annotations


class LatminError(Exception):
    exit_code = 2


class InputFormatError(LatminError, ValueError):
    """Malformed JSON/CSV input or out-of-range indices."""

    exit_code = 2


class CycleError(LatminError, ValueError):
    """The given strict relations contain a directed cycle."""

    exit_code = 3


class SizeError(LatminError, ValueError):
    """A ground set or edge set exceeds the configured enumeration cap."""

    exit_code = 4


class DimensionMismatchError(LatminError, ValueError):
    exit_code = 5


class EmptyFamilyError(LatminError, ValueError):
    exit_code = 6


class NotLatticeError(LatminError, ValueError):
    """The family is not closed under union and intersection."""

    exit_code = 6


class InfiniteValueError(LatminError, ValueError):
    """A set-function table holds -inf where finite values are required."""

    exit_code = 7


class NonIntegerError(LatminError, ValueError):
    exit_code = 7


class NegativeWeightError(LatminError, ValueError):
    exit_code = 7
