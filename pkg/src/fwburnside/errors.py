"""Exception types shared across the package.

The CLI maps these onto exit codes: parse/usage problems exit 1,
precondition failures exit 2, and anything signalling a broken internal
invariant (AssertionError included) exits 3.
"""


class AlgebraError(Exception):
    """Base class for all errors raised by this package."""


class SpecParseError(AlgebraError):
    """Malformed group-spec string. Carries the offset where parsing failed."""

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class InvalidParameterError(AlgebraError):
    """Well-formed spec with an out-of-range parameter (odd dihedral, S7, ...)."""


class CapExceededError(AlgebraError):
    """Requested group order exceeds the configured cap."""


class PreconditionError(AlgebraError):
    """Operation called outside its domain (non-normal kernel, group mismatch, ...)."""
