"""Shared exception types."""

from __future__ import annotations


class PreconditionError(ValueError):
    """Arguments violate an operation's contract."""


class CapExceededError(RuntimeError):
    """A configured resource cap (table horizon, exponent cap) was exceeded."""


class InternalCheckError(RuntimeError):
    """Two redundant computation paths disagreed; this always indicates a bug."""
