"""Exception hierarchy shared by all lpbus modules."""


class LpBusError(Exception):
    """Base class for every error raised by lpbus."""


class InvalidArgumentError(LpBusError, ValueError):
    """An argument violates a documented precondition."""


class InvalidCodewordError(InvalidArgumentError):
    """A received word is not a codeword of the configured code."""


class InvalidTraceError(InvalidArgumentError):
    """A trace is malformed (mixed widths, bad characters, ...)."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class ResourceLimitError(LpBusError):
    """The request exceeds a documented brute-force size bound."""
