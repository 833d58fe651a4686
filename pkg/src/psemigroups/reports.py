"""Report containers shared by the verifier surfaces."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass
class IdentityReport:
    """Two-sided identity check: passes iff every lhs value equals its rhs.

    ``extras`` holds diagnostic values that are not part of the identity
    itself (for example the value a known-bad variant would produce).
    """

    identity: str
    params: dict[str, Any]
    lhs: dict[str, Any]
    rhs: dict[str, Any]
    passed: bool
    note: str = ""
    extras: dict[str, Any] = field(default_factory=dict)


@dataclass
class VerdictBundle:
    """Named boolean verdicts plus an overall pass flag.

    ``applicable`` is False when the check's hypotheses do not hold for the
    given instance; that is reported, never treated as a failure.
    """

    name: str
    verdicts: dict[str, bool]
    passed: bool
    applicable: bool = True
    note: str = ""
