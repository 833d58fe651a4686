"""Exact arithmetic for p-numerical semigroups.

Members are the non-negative integers with more than p representations over
a fixed generator list; the package computes the class minima (Apery data),
gaps, power sums, pseudo-Frobenius sets, symmetry classifications, closure
properties, and verifies the scaling identities relating different
generator lists.
"""

from .arf import ArfReport, is_arf, verify_arf_conductor_kunz, verify_arf_heredity
from .denumerant import (
    DenumerantTable,
    GeneratorSet,
    as_generator_set,
    build_table,
    denumerant,
    horizon_cap,
    representations,
)
from .errors import CapExceededError, InternalCheckError, PreconditionError
from .exactmath import BigRat, SeriesCheck, bernoulli, eulerian, verify_eulerian_gf
from .identities import (
    is_minimal_generator_system,
    verify_gcd_scaling,
    verify_johnson,
    verify_watanabe,
)
from .reports import IdentityReport, VerdictBundle
from .semigroup import (
    GapStats,
    PSemigroup,
    apery_set,
    build,
    frobenius_p,
    gap_stats,
    genus_p,
    kunz_coordinates,
    membership,
    multiplicity_p,
    power_sum_bernoulli,
    power_sum_gaps,
    sylvester_sum_p,
    weighted_power_sum,
)
from .symmetry import (
    PATTERN_FULL_INTERVAL,
    PATTERN_OTHER,
    PATTERN_SINGLETON_PLUS_TAIL,
    CofiniteSet,
    SymmetryReport,
    classify,
    detect_pattern,
    hlk_sets,
    pseudo_frobenius,
    type_p,
    verify_almost_symmetric_equivalences,
    verify_apery_pairings,
    verify_nari,
    verify_pf_consequences,
    verify_symmetry_equivalences,
)

__all__ = [
    "ArfReport",
    "BigRat",
    "CapExceededError",
    "CofiniteSet",
    "DenumerantTable",
    "GapStats",
    "GeneratorSet",
    "IdentityReport",
    "InternalCheckError",
    "PATTERN_FULL_INTERVAL",
    "PATTERN_OTHER",
    "PATTERN_SINGLETON_PLUS_TAIL",
    "PSemigroup",
    "PreconditionError",
    "SeriesCheck",
    "SymmetryReport",
    "VerdictBundle",
    "apery_set",
    "as_generator_set",
    "bernoulli",
    "build",
    "build_table",
    "classify",
    "denumerant",
    "detect_pattern",
    "eulerian",
    "frobenius_p",
    "gap_stats",
    "genus_p",
    "hlk_sets",
    "horizon_cap",
    "is_arf",
    "is_minimal_generator_system",
    "kunz_coordinates",
    "membership",
    "multiplicity_p",
    "power_sum_bernoulli",
    "power_sum_gaps",
    "pseudo_frobenius",
    "representations",
    "sylvester_sum_p",
    "type_p",
    "verify_arf_conductor_kunz",
    "verify_arf_heredity",
    "verify_almost_symmetric_equivalences",
    "verify_apery_pairings",
    "verify_eulerian_gf",
    "verify_gcd_scaling",
    "verify_johnson",
    "verify_nari",
    "verify_pf_consequences",
    "verify_symmetry_equivalences",
    "verify_watanabe",
    "weighted_power_sum",
]
