"""Mechanical verifiers for the scaling identities: multiplying all base
generators by a coprime factor (frobenius/genus transport and symmetry
preservation), and dividing out the common factor of all generators after
the first.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable

from .denumerant import GeneratorSet, as_generator_set, denumerant
from .errors import PreconditionError
from .reports import IdentityReport
from .semigroup import apery_set, build, frobenius_p, genus_p, sylvester_sum_p
from .symmetry import classify

_SCALING_SUM_NOTE = (
    "the quadratic gap-sum scaling uses 12 in its final denominator;"
    " a published variant with denominator 2 contradicts direct enumeration"
    " (see extras for the value it would give)"
)


def is_minimal_generator_system(gens: GeneratorSet | Iterable[int]) -> bool:
    """True iff no generator is a non-negative combination of the others."""
    A = as_generator_set(gens)
    for i, b in enumerate(A.ordered):
        others = [x for j, x in enumerate(A.ordered) if j != i]
        if _representable(b, others):
            return False
    return True


def _representable(target: int, parts: list[int]) -> bool:
    reach = [False] * (target + 1)
    reach[0] = True
    for a in parts:
        for n in range(a, target + 1):
            reach[n] = reach[n] or reach[n - a]
    return reach[target]


def _scaling_instances(
    alpha: int, beta: int, base: GeneratorSet | Iterable[int]
) -> tuple[GeneratorSet, GeneratorSet, GeneratorSet]:
    """Validate the shared preconditions and build both generator lists."""
    B = as_generator_set(base)
    if alpha < 2:
        raise PreconditionError("alpha must be at least 2")
    if beta < 1:
        raise PreconditionError("beta must be positive")
    if gcd(alpha, beta) != 1:
        raise PreconditionError("alpha and beta must be coprime")
    if alpha in B.ordered:
        raise PreconditionError("alpha must differ from every base generator")
    if not is_minimal_generator_system(B):
        raise PreconditionError("base generators must form a minimal system")
    if denumerant(B, alpha) == 0:
        raise PreconditionError(
            "alpha must lie in the semigroup generated by the base"
        )
    scaled = GeneratorSet((alpha, *(beta * b for b in B.ordered)))
    unscaled = GeneratorSet((alpha, *B.ordered))
    return B, scaled, unscaled


def verify_johnson(
    alpha: int, beta: int, base: GeneratorSet | Iterable[int], p: int
) -> IdentityReport:
    """Frobenius and genus transport under scaling the base by beta:

        frobenius(alpha, beta*B) = beta * frobenius(alpha, B) + (beta-1) * alpha
        genus(alpha, beta*B)     = beta * genus(alpha, B) + (alpha-1)(beta-1)/2
    """
    B, scaled, unscaled = _scaling_instances(alpha, beta, base)
    lhs = {
        "frobenius": frobenius_p(scaled, p),
        "genus": genus_p(scaled, p),
    }
    rhs = {
        "frobenius": beta * frobenius_p(unscaled, p) + (beta - 1) * alpha,
        "genus": beta * genus_p(unscaled, p) + (alpha - 1) * (beta - 1) // 2,
    }
    return IdentityReport(
        "johnson",
        {"alpha": alpha, "beta": beta, "base": list(B.ordered), "p": p},
        lhs,
        rhs,
        passed=lhs == rhs,
    )


def verify_watanabe(
    alpha: int, beta: int, base: GeneratorSet | Iterable[int], p: int
) -> IdentityReport:
    """Symmetry is preserved under scaling the base by beta, and the least
    member scales by exactly beta."""
    B, scaled, unscaled = _scaling_instances(alpha, beta, base)
    sp_scaled = build(scaled, p)
    sp_unscaled = build(unscaled, p)
    lhs = {
        "symmetric": classify(sp_scaled).symmetric,
        "multiplicity": sp_scaled.multiplicity,
    }
    rhs = {
        "symmetric": classify(sp_unscaled).symmetric,
        "multiplicity": beta * sp_unscaled.multiplicity,
    }
    return IdentityReport(
        "watanabe",
        {"alpha": alpha, "beta": beta, "base": list(B.ordered), "p": p},
        lhs,
        rhs,
        passed=lhs == rhs,
    )


def _as_int_if_integral(x: Fraction) -> int | Fraction:
    return int(x) if x.denominator == 1 else x


def verify_gcd_scaling(gens: GeneratorSet | Iterable[int], p: int) -> IdentityReport:
    """Dividing the generators after the first by their gcd d relates the two
    instances exactly:

        frobenius = d * frobenius' + (d-1) * a1
        genus     = d * genus' + (d-1)(a1-1)/2
        gap sum   = d^2 * sum' + (a1 d (d-1)/2) * genus'
                    + (a1-1)(d-1)(2 a1 d - a1 - d - 1)/12

    and the sorted class minima modulo a1 of the original equal d times
    those of the reduced instance.  The first listed generator plays the
    role of a1 regardless of whether it is the minimum.
    """
    A = as_generator_set(gens)
    first, rest = A.ordered[0], A.ordered[1:]
    d = gcd(*rest) if len(rest) > 1 else rest[0]
    if d <= 1:
        raise PreconditionError(
            "generators after the first must share a common factor > 1"
        )
    reduced_rest = tuple(x // d for x in rest)
    if any(x < 2 for x in reduced_rest):
        raise PreconditionError("reduced generators must stay at least 2")
    reduced = GeneratorSet((first, *reduced_rest))

    g, n, s = frobenius_p(A, p), genus_p(A, p), sylvester_sum_p(A, p)
    g_r, n_r, s_r = frobenius_p(reduced, p), genus_p(reduced, p), sylvester_sum_p(reduced, p)

    cubic = (first - 1) * (d - 1) * (2 * first * d - first - d - 1)
    expected_sum = d * d * s_r + Fraction(first * d * (d - 1), 2) * n_r + Fraction(cubic, 12)
    denominator_2_variant = (
        d * d * s_r + Fraction(first * d * (d - 1), 2) * n_r + Fraction(cubic, 2)
    )

    lhs = {
        "frobenius": g,
        "genus": n,
        "sylvester_sum": s,
        "apery": sorted(apery_set(A, p, modulus=first)),
    }
    rhs = {
        "frobenius": d * g_r + (d - 1) * first,
        "genus": d * n_r + (d - 1) * (first - 1) // 2,
        "sylvester_sum": _as_int_if_integral(expected_sum),
        "apery": sorted(d * x for x in apery_set(reduced, p, modulus=first)),
    }
    return IdentityReport(
        "gcd-scaling",
        {"generators": list(A.ordered), "d": d, "p": p},
        lhs,
        rhs,
        passed=lhs == rhs,
        note=_SCALING_SUM_NOTE,
        extras={
            "sylvester_sum_denominator_2_variant": _as_int_if_integral(
                denominator_2_variant
            )
        },
    )
