"""Exception hierarchy shared by every module.

The CLI maps each class to its own exit code, so keep the hierarchy flat.
"""


class SignedColorError(Exception):
    """Base class for all package errors."""


class GraphError(SignedColorError, ValueError):
    """Malformed graph, rotation system or vertex reference."""


class PreconditionError(SignedColorError, ValueError):
    """A solver hypothesis does not hold for the given input."""


class TooSmallError(GraphError, PreconditionError):
    """Fewer than three vertices where a plane embedding is required."""


class InvariantBreach(SignedColorError, RuntimeError):
    """An internal guarantee failed. Reaching this is a bug."""


class InstanceFormatError(SignedColorError, ValueError):
    """Instance text could not be parsed or failed validation."""

    def __init__(self, message: str, field: str | None = None):
        super().__init__(message)
        self.field = field


class UnknownFieldError(InstanceFormatError):
    pass


class DanglingVertexError(InstanceFormatError):
    pass


class RotationFormatError(InstanceFormatError):
    pass


class DuplicateEdgeError(InstanceFormatError):
    pass


class SignValueError(InstanceFormatError):
    pass
