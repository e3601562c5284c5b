"""Exception types shared across the package."""


class FieldMismatchError(ValueError):
    """Raised when operands belong to different finite fields."""


class ParseError(ValueError):
    """Raised on malformed textual input; carries the offending position."""

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class ResourceLimitError(RuntimeError):
    """Raised when an exhaustive loop or factoring effort exceeds its budget."""


class InternalConsistencyError(RuntimeError):
    """Raised when a structural identity that must hold fails at runtime."""
