"""Pseudo-Frobenius data, mirror-set decompositions, and the symmetry
classification of a built instance.

The mirror of x is multiplicity + frobenius - x.  All classifications are
evaluated from first principles on the gap and member sets; the verify_*
functions re-derive the same classifications along independent routes and
report agreement.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .denumerant import GeneratorSet, as_generator_set
from .reports import VerdictBundle
from .semigroup import PSemigroup, build

PATTERN_FULL_INTERVAL = "FULL_INTERVAL"
PATTERN_SINGLETON_PLUS_TAIL = "SINGLETON_PLUS_TAIL"
PATTERN_OTHER = "OTHER"

# Index arithmetic for the residue-pairing checks reads m(t) as the class
# minimum of t's residue class; paired indices always sum to
# frobenius + multiplicity.  This is the only reading under which the
# pairing identities hold on the worked symmetric instances.
_PAIRING_NOTE = (
    "indices are reduced to residue classes; paired indices sum to"
    " frobenius + multiplicity"
)


@dataclass(frozen=True)
class CofiniteSet:
    """Integers >= all_from together with the listed smaller values."""

    below: tuple[int, ...]
    all_from: int

    def contains(self, n: int) -> bool:
        return n >= self.all_from or n in self.below

    __contains__ = contains


@dataclass(frozen=True)
class SymmetryReport:
    """Classification of one instance: pseudo-Frobenius set, type, the
    mirror decomposition, and the four symmetry flags."""

    pf: tuple[int, ...]
    type_count: int
    h_set: tuple[int, ...]
    l_set: tuple[int, ...]
    k_set: CofiniteSet
    symmetric: bool
    pseudo_symmetric: bool
    almost_symmetric: bool
    completely_symmetric: bool


@lru_cache(maxsize=512)
def pseudo_frobenius(sp: PSemigroup) -> tuple[int, ...]:
    """Non-members x with x + s - multiplicity a member for every member
    s above the multiplicity.

    Only shifts t = s - multiplicity <= frobenius can fail (anything larger
    lands above the largest gap), so the quantifier is finite.  Gaps are
    packed into a bitmask; shift t eliminates every gap x with x + t also a
    gap.
    """
    gapmask = 0
    for x in sp.gaps:
        gapmask |= 1 << x
    failmask = 0
    for t in _member_shifts(sp):
        failmask |= gapmask >> t
    return tuple(x for x in sp.gaps if not (failmask >> x) & 1)


def _member_shifts(sp: PSemigroup) -> list[int]:
    """Shifts s - multiplicity over members s in (multiplicity, multiplicity
    + frobenius]; larger members cannot invalidate any candidate."""
    low, g, c = sp.multiplicity, sp.frobenius, sp.conductor
    shifts = [s - low for s in sp.small_elements if low < s <= g]
    shifts.extend(range(max(c - low, 1), g + 1))
    return shifts


def type_p(sp: PSemigroup) -> int:
    """Number of pseudo-Frobenius elements."""
    return len(pseudo_frobenius(sp))


def hlk_sets(sp: PSemigroup) -> tuple[tuple[int, ...], tuple[int, ...], CofiniteSet]:
    """Mirror image of the members (within the non-negatives), the set whose
    element and mirror both fall outside, and the mirror image of the
    complement (co-finite upward)."""
    g, low = sp.frobenius, sp.multiplicity
    total = g + low
    h_tail = {total - s for s in sp.small_elements if s <= g}
    h = tuple(sorted(set(range(low)) | h_tail))
    l = tuple(x for x in sp.gaps if x > low and not sp.contains(total - x))
    k_below = tuple(sorted(total - x for x in sp.gaps))
    return h, l, CofiniteSet(k_below, total + 1)


def _mirror_pairs_exactly_one(sp: PSemigroup, exception: int | None) -> bool:
    """True iff every pair {x, total - x} holds exactly one member.

    Pairs with a negative side always qualify (the other side lands above
    the largest gap), so only x in [0, total] needs scanning.  A pair whose
    two sides coincide (x = total - x) can never hold exactly one member,
    so an even total fails unless the midpoint is exempted.
    """
    total = sp.frobenius + sp.multiplicity
    for x in range(total // 2 + 1):
        if x == exception:
            continue
        if sp.contains(x) == sp.contains(total - x):
            return False
    return True


def classify(sp: PSemigroup) -> SymmetryReport:
    """First-principles evaluation of the four symmetry flags.

    symmetric: the mirror x -> total - x exchanges members and non-members
    exactly (each pair summing to the mirror total holds exactly one
    member).  pseudo_symmetric: the mirror total is even and the exchange
    is exact away from the midpoint, which is its own mirror.
    almost_symmetric: every both-sides-outside element is pseudo-Frobenius.
    completely_symmetric: symmetric with the least member at the conductor.

    The exchange must hold in both directions: one gap mirroring onto
    another breaks it, but so do two members mirroring onto each other,
    which can happen here because members need not be closed downward.
    """
    pf = pseudo_frobenius(sp)
    h, l, k = hlk_sets(sp)
    total = sp.frobenius + sp.multiplicity
    symmetric = _mirror_pairs_exactly_one(sp, exception=None)
    pseudo = total % 2 == 0 and _mirror_pairs_exactly_one(sp, exception=total // 2)
    return SymmetryReport(
        pf=pf,
        type_count=len(pf),
        h_set=h,
        l_set=l,
        k_set=k,
        symmetric=symmetric,
        pseudo_symmetric=pseudo,
        almost_symmetric=set(l) <= set(pf),
        completely_symmetric=symmetric and sp.multiplicity == sp.conductor,
    )


def verify_symmetry_equivalences(sp: PSemigroup) -> VerdictBundle:
    """Evaluate five independent characterizations of mirror symmetry and
    report whether they all agree.

    definition: every gap mirrors to a member.  window_counts: members and
    gaps split the window [multiplicity, frobenius] in half.
    complementary_pairs: of every non-negative pair summing to the mirror
    total, exactly one side is a member.  sorted_pairing: opposite entries
    of the sorted class minima sum to total + modulus.  genus_midpoint:
    twice the gap count is total + 1.
    """
    g, low, a = sp.frobenius, sp.multiplicity, sp.modulus
    total = g + low

    members_in_window = sum(1 for n in range(low, g + 1) if sp.contains(n))
    gaps_in_window = (g - low + 1) - members_in_window

    ls = sp.apery_sorted
    verdicts = {
        "definition": _mirror_pairs_exactly_one(sp, exception=None),
        "window_counts": members_in_window == gaps_in_window,
        "complementary_pairs": all(
            sp.contains(x) != sp.contains(total - x) for x in range(total // 2 + 1)
        ),
        "sorted_pairing": all(
            ls[i] + ls[a - i - 1] == total + a for i in range(1, a // 2 + 1)
        ),
        "genus_midpoint": 2 * len(sp.gaps) == total + 1,
    }
    return VerdictBundle(
        "symmetry-equivalences",
        verdicts,
        passed=len(set(verdicts.values())) == 1,
    )


def verify_apery_pairings(sp: PSemigroup) -> VerdictBundle:
    """Residue-pairing characterizations of symmetric (odd mirror total) and
    pseudo-symmetric (even total), checked against the definitional flags.

    With m(t) the class minimum of t mod modulus: for odd totals, symmetric
    should be equivalent to m((total+1)/2 + j) + m((total-1)/2 - j) =
    total + modulus for every j.  For even totals, pseudo-symmetric should
    be equivalent to m(mid + j) + m(mid - j) = total + 2*modulus when both
    indices fall in the midpoint class and the midpoint is a gap, total when
    it is a member, and total + modulus otherwise.

    A pseudo-symmetric instance also has gap count mid + 1 (midpoint gap)
    or mid (midpoint member); that count identity is necessary but not
    sufficient (it can hold by accident on asymmetric instances), so only
    its necessity direction enters the overall verdict and the raw count
    check is reported alongside.
    """
    g, low, a = sp.frobenius, sp.multiplicity, sp.modulus
    total = g + low
    flags = classify(sp)

    def m(t: int) -> int:
        return sp.apery_by_residue[t % a]

    window = range(-2 * a, 2 * a + 1)
    if total % 2 == 1:
        hi, lo = (total + 1) // 2, (total - 1) // 2
        pairing = all(m(hi + j) + m(lo - j) == total + a for j in window)
        verdicts = {
            "pairing": pairing,
            "matches_classification": pairing == flags.symmetric,
        }
        return VerdictBundle(
            "apery-pairings",
            verdicts,
            passed=verdicts["matches_classification"],
            note=_PAIRING_NOTE,
        )

    mid = total // 2
    midpoint_gap = not sp.contains(mid)

    def expected(j: int) -> int:
        if j % a == 0:
            return total + (2 * a if midpoint_gap else 0)
        return total + a

    pairing = all(m(mid + j) + m(mid - j) == expected(j) for j in window)
    genus_offset = len(sp.gaps) == mid + (1 if midpoint_gap else 0)
    verdicts = {
        "midpoint_pairing": pairing,
        "matches_classification": pairing == flags.pseudo_symmetric,
        "genus_offset": genus_offset,
        "genus_offset_necessity": (not flags.pseudo_symmetric) or genus_offset,
    }
    return VerdictBundle(
        "apery-pairings",
        verdicts,
        passed=verdicts["matches_classification"]
        and verdicts["genus_offset_necessity"],
        note=_PAIRING_NOTE,
    )


def verify_pf_consequences(sp: PSemigroup) -> VerdictBundle:
    """Claimed consequences of the symmetry flags for the pseudo-Frobenius
    set, each re-derived from the definitions.

    Symmetric forces PF = {frobenius}, type 1, and frobenius and
    multiplicity of opposite parity.  Pseudo-symmetric is claimed to force
    PF = {frobenius, midpoint} and type 2 when the midpoint is a gap, and
    PF = {frobenius}, type 1, when it is a member.  The midpoint-gap claim
    can fail (the midpoint need not be pseudo-Frobenius when members are
    not closed downward); this function reports such failures rather than
    assuming the claim.  Vacuously passes when neither flag holds.
    """
    flags = classify(sp)
    g, low = sp.frobenius, sp.multiplicity
    verdicts: dict[str, bool] = {}
    if flags.symmetric:
        verdicts["symmetric_pf_singleton"] = flags.pf == (g,)
        verdicts["symmetric_type_one"] = flags.type_count == 1
        verdicts["symmetric_parity"] = (g - low) % 2 == 1
    if flags.pseudo_symmetric:
        mid = (g + low) // 2
        if sp.contains(mid):
            verdicts["pseudo_pf_singleton"] = flags.pf == (g,)
            verdicts["pseudo_type_one"] = flags.type_count == 1
        else:
            verdicts["pseudo_pf_pair"] = set(flags.pf) == {mid, g}
            verdicts["pseudo_type_two"] = flags.type_count == 2
    applicable = bool(verdicts)
    return VerdictBundle(
        "pf-consequences",
        verdicts,
        passed=all(verdicts.values()),
        applicable=applicable,
        note="" if applicable else "neither symmetry hypothesis holds",
    )


def verify_almost_symmetric_equivalences(sp: PSemigroup) -> VerdictBundle:
    """Three characterizations of almost symmetry, asserted to coincide:
    the both-sides-outside set is contained in PF; PF is that set plus the
    frobenius number; every gap mirrors to a member or is itself PF."""
    pf = set(pseudo_frobenius(sp))
    _, l, _ = hlk_sets(sp)
    g, low = sp.frobenius, sp.multiplicity
    total = g + low
    verdicts = {
        "l_subset_pf": set(l) <= pf,
        "pf_is_l_plus_frobenius": pf == set(l) | {g},
        "mirror_or_pf": all(
            sp.contains(total - x) or x in pf for x in sp.gaps
        ),
    }
    return VerdictBundle(
        "almost-symmetric-equivalences",
        verdicts,
        passed=len(set(verdicts.values())) == 1,
    )


def detect_pattern(sp: PSemigroup) -> str:
    """Tag the two distinguished almost-symmetric member layouts.

    FULL_INTERVAL: no gap at or above the least member (the members are one
    unbroken tail).  SINGLETON_PLUS_TAIL: the least member stands alone
    before the conductor tail, with at least two integers missing between
    them.  Everything else is OTHER.  Both named layouts force almost
    symmetry.
    """
    low, c = sp.multiplicity, sp.conductor
    if low == c:
        return PATTERN_FULL_INTERVAL
    if sp.small_elements == (low, c) and c >= low + 3:
        return PATTERN_SINGLETON_PLUS_TAIL
    return PATTERN_OTHER


def verify_nari(gens: GeneratorSet | Iterable[int]) -> VerdictBundle:
    """At p = 0: if twice the gap count equals frobenius + type, the
    semigroup must be almost symmetric.  Only the implication is checked;
    the converse is not claimed."""
    sp = build(as_generator_set(gens), 0)
    flags = classify(sp)
    count_identity = 2 * len(sp.gaps) == sp.frobenius + flags.type_count
    return VerdictBundle(
        "nari",
        {
            "count_identity": count_identity,
            "almost_symmetric": flags.almost_symmetric,
        },
        passed=(not count_identity) or flags.almost_symmetric,
    )
