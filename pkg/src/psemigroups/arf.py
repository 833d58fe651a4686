"""Closure of a built instance under x + y - z for members x >= y >= z,
plus the structural consequences for class minima and their quotients."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .denumerant import GeneratorSet, as_generator_set
from .errors import PreconditionError
from .reports import VerdictBundle
from .semigroup import PSemigroup, build


@dataclass
class ArfReport:
    """Outcome of a closure check.  ``witness`` is a failing triple
    (x, y, z) with x >= y >= z, all members, x + y - z outside; present
    exactly when the instance is not closed."""

    is_arf: bool
    witness: tuple[int, int, int] | None = None
    apery_checks: tuple[bool, bool] | None = None
    kunz_checks: tuple[bool, bool] | None = None
    applicable: bool = True
    note: str = ""


def is_arf(sp: PSemigroup, limit: int | None = None) -> ArfReport:
    """Exhaustively check x + y - z membership over members below ``limit``
    (default: the conductor; x at or above it cannot fail since
    x + y - z >= x).

    Pairs (y, z) are grouped by their difference t: some triple with that
    difference fails iff some member x at or above the least such y has
    x + t outside.  Bitmasks keep the scan near-linear in the conductor.
    """
    cutoff = sp.conductor if limit is None else limit
    if cutoff < 0:
        raise PreconditionError("limit must be non-negative")
    member_mask = 0
    for n in range(cutoff):
        if sp.contains(n):
            member_mask |= 1 << n
    gap_mask = 0
    for x in sp.gaps:
        gap_mask |= 1 << x
    for t in range(cutoff):
        pair_mask = member_mask & (member_mask << t)
        if pair_mask == 0:
            continue
        y_min = (pair_mask & -pair_mask).bit_length() - 1
        fail = (member_mask & (gap_mask >> t)) >> y_min
        if fail:
            x = (fail & -fail).bit_length() - 1 + y_min
            return ArfReport(False, witness=(x, y_min, y_min - t))
    return ArfReport(True)


def verify_arf_heredity(a: int, b: int, p_max: int) -> VerdictBundle:
    """If the two-generator instance at p = 0 is closed, every instance up
    to p_max must be closed as well.  Reported as not applicable when the
    base instance is not closed."""
    if p_max < 0:
        raise PreconditionError("p_max must be non-negative")
    gens = as_generator_set((a, b))
    base = is_arf(build(gens, 0))
    if not base.is_arf:
        return VerdictBundle(
            "arf-heredity",
            {},
            passed=True,
            applicable=False,
            note=f"base instance is not closed (witness {base.witness})",
        )
    verdicts = {f"p={p}": is_arf(build(gens, p)).is_arf for p in range(p_max + 1)}
    return VerdictBundle("arf-heredity", verdicts, passed=all(verdicts.values()))


def verify_arf_conductor_kunz(sp: PSemigroup) -> ArfReport:
    """For a closed instance the class minima next to the zero class are
    pinned by the conductor c and its residue r modulo a:

        minimum of class 1:    c + 1 if r = 0, else c - r + a + 1
        minimum of class a-1:  c - r + a - 1

    and the matching coordinate quotients are ceil(c/a) and floor(c/a).
    Reported as not applicable when the instance is not closed.
    """
    report = is_arf(sp)
    if not report.is_arf:
        return ArfReport(
            False,
            witness=report.witness,
            applicable=False,
            note="not applicable: instance is not closed under x + y - z",
        )
    a, c = sp.modulus, sp.conductor
    r = c % a
    expected_first = c + 1 if r == 0 else c - r + a + 1
    expected_last = c - r + a - 1
    apery_checks = (
        sp.apery_by_residue[1 % a] == expected_first,
        sp.apery_by_residue[(a - 1) % a] == expected_last,
    )
    kunz_checks = (
        sp.kunz[1 % a] == -(-c // a),
        sp.kunz[(a - 1) % a] == c // a,
    )
    return ArfReport(True, apery_checks=apery_checks, kunz_checks=kunz_checks)
