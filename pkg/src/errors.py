"""Exception types for liegraph.

Every error the library raises on purpose derives from ``LieGraphError`` so the
CLI can map it to an exit code in one place.
"""

from __future__ import annotations

from typing import Optional


class LieGraphError(Exception):
    """Base class for all liegraph errors."""


class GraphParseError(LieGraphError):
    """A graph6 string, edge list or graph spec could not be parsed."""

    def __init__(self, message: str, offset: Optional[int] = None):
        self.offset = offset
        if offset is not None:
            message = f"{message} (at offset {offset})"
        super().__init__(message)


class GraphValidationError(LieGraphError):
    """A graph or vertex set violates its invariants."""


class CliqueError(LieGraphError):
    """A clique family member does not induce a complete subgraph."""


class OrderLimitError(LieGraphError):
    """Canonical coding was requested beyond the configured order limit."""

    def __init__(self, order: int, limit: int):
        self.order = order
        self.limit = limit
        super().__init__(f"Graph order {order} exceeds canonical-code limit {limit}")


class ConfigError(LieGraphError):
    """Invalid configuration value."""


class InvariantViolation(LieGraphError):
    """An internal consistency check failed."""
