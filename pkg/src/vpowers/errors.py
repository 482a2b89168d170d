"""Exception hierarchy shared by the library and the command line."""

from __future__ import annotations


class VPowersError(Exception):
    """Base class for all errors raised by this package."""


class PreconditionError(VPowersError, ValueError):
    """An operation was called outside its domain (e.g. v-number of the unit ideal)."""


class RingMismatchError(PreconditionError):
    """Two operands live in different polynomial rings."""


class ResourceLimitError(VPowersError):
    """A computation exceeded a configured size cap."""


class ParseError(VPowersError):
    """Malformed input text, carrying a 1-based line and column."""

    def __init__(self, message: str, line: int = 0, column: int = 0):
        self.line = line
        self.column = column
        self.bare_message = message
        if line:
            message = f"{message} at {line}:{column}"
        super().__init__(message)
