"""Exception hierarchy for mpm-tutte.

All exceptions inherit from MpmError (single catch point).
Messages name the offending element, interval or coordinate.
"""

from __future__ import annotations


class MpmError(Exception):
    """Base exception for all mpm-tutte errors."""


class InvalidElementError(MpmError):
    """An element is not in the ground set."""


class DomainError(MpmError):
    """An operation was applied outside its domain."""


class PreconditionError(MpmError):
    """A stated precondition of an operation does not hold."""


class NotApplicableError(PreconditionError):
    """A structural result does not apply to this presentation."""


class ValidationError(MpmError):
    """A presentation is neither an antichain nor satisfies condition (C)."""


class NormalizationError(ValidationError):
    """Condition (C) fails, so no antichain reduction exists."""


class DiagramError(MpmError):
    """A diagram violates its type invariants."""


class DimensionError(MpmError):
    """A polynomial coefficient falls outside the allowed degree bounds."""


class GraphInvariantError(MpmError):
    """A computation graph vertex has malformed out-edges."""


class ResourceGuardError(MpmError):
    """An exhaustive computation would exceed its configured size guard."""


class InfeasibleOperationError(MpmError):
    """A requested diagram-level minor does not exist."""


class SettingsError(MpmError):
    """Configuration could not be loaded or is malformed."""


class InputFormatError(MpmError):
    """Malformed presentation or diagram text."""

    def __init__(self, message: str, line: int | None = None) -> None:
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)
