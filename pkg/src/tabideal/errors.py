"""Exception types shared across the package."""

from __future__ import annotations


class TabidealError(Exception):
    """Base class for all package-specific errors."""


class TableauParseError(TabidealError):
    """Malformed tableau or partition input.

    Carries the 1-based input line number when one is known.
    """

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class EmptyTableauError(TabidealError):
    """An operation that requires at least one box was given the empty tableau."""


class GuardExceededError(TabidealError):
    """A configured desk-scale guard was exceeded.

    Structured so callers can report which guard tripped and how far the
    computation got before stopping.
    """

    def __init__(self, guard: str, limit: int, reached: int):
        self.guard = guard
        self.limit = limit
        self.reached = reached
        super().__init__(
            f"{guard} guard exceeded: limit {limit}, reached {reached}"
        )


class DeskScaleError(TabidealError):
    """No computation route fits the configured guards for this instance."""
