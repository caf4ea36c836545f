"""Exception hierarchy.

User-facing input problems derive from :class:`CubicError` (CLI exit code 1);
internal consistency failures raise :class:`InvariantViolation` (exit code 2).
"""


class CubicError(ValueError):
    """Invalid input to one of the solver operations."""


class NotACubicError(CubicError):
    pass


class NotARootError(CubicError):
    pass


class DegenerateError(CubicError):
    """A formula's denominator vanishes for this input."""


class RadicandMismatchError(CubicError):
    pass


class ParseError(CubicError):
    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class InvariantViolation(RuntimeError):
    """An exact identity that must hold by construction did not."""
