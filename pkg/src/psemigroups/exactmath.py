"""Exact special-number arithmetic: Bernoulli numbers, Eulerian numbers, and
a truncated-power-series check of the Eulerian generating function.

Every value here is an ``int`` or a ``fractions.Fraction``; nothing rounds.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import PreconditionError

# Exact rational scalar used throughout the package.
BigRat = Fraction

# Bernoulli numbers under the x/(e^x - 1) convention, so B_1 = -1/2.  The
# cache grows on demand and is never evicted; expected indices are tiny.
_bernoulli: list[Fraction] = [Fraction(1)]
_bernoulli_lock = threading.Lock()

# Triangular table of Eulerian numbers: row 0 is [1], row n >= 1 holds the
# entries for m = 0 .. n-1.
_eulerian: list[list[int]] = [[1]]
_eulerian_lock = threading.Lock()


def bernoulli(n: int) -> Fraction:
    """Bernoulli number B_n with B_1 = -1/2.

    Computed by the recurrence sum_{k=0}^{n} C(n+1, k) B_k = 0 for n >= 1,
    anchored at B_0 = 1, and cached.
    """
    if n < 0:
        raise PreconditionError("Bernoulli index must be non-negative")
    with _bernoulli_lock:
        while len(_bernoulli) <= n:
            m = len(_bernoulli)
            acc = Fraction(0)
            for k in range(m):
                acc += comb(m + 1, k) * _bernoulli[k]
            _bernoulli.append(-acc / (m + 1))
        return _bernoulli[n]


def eulerian(n: int, m: int) -> int:
    """Eulerian number <n, m>; zero for m outside the triangle.

    Recurrence: <n, m> = (m+1) <n-1, m> + (n-m) <n-1, m-1>, with <0, 0> = 1.
    """
    if n < 0:
        raise PreconditionError("Eulerian row index must be non-negative")
    if n == 0:
        return 1 if m == 0 else 0
    if m < 0 or m >= n:
        return 0
    with _eulerian_lock:
        while len(_eulerian) <= n:
            r = len(_eulerian)
            prev = _eulerian[r - 1]

            def entry(i: int) -> int:
                return prev[i] if 0 <= i < len(prev) else 0

            _eulerian.append(
                [(i + 1) * entry(i) + (r - i) * entry(i - 1) for i in range(r)]
            )
        return _eulerian[n][m]


@dataclass(frozen=True)
class SeriesCheck:
    """Outcome of a truncated-series comparison."""

    passed: bool
    first_mismatch: int | None = None


def verify_eulerian_gf(n: int, order: int) -> SeriesCheck:
    """Check the Eulerian generating-function identity as truncated series.

    Compares (1 - x)^(n+1) * sum_{k=0}^{order} k^n x^k against
    sum_m <n, m> x^(m+1) coefficient-wise on every degree <= order - n - 1,
    where truncation cannot have disturbed the product.
    """
    if n < 1:
        raise PreconditionError("series exponent n must be positive")
    if order < n + 2:
        raise PreconditionError("truncation order must be at least n + 2")
    source = [k**n for k in range(order + 1)]
    binom = [(-1) ** i * comb(n + 1, i) for i in range(n + 2)]
    for degree in range(order - n):
        lhs = sum(
            binom[i] * source[degree - i] for i in range(min(degree, n + 1) + 1)
        )
        rhs = eulerian(n, degree - 1) if degree >= 1 else 0
        if lhs != rhs:
            return SeriesCheck(False, degree)
    return SeriesCheck(True, None)
