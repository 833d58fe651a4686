"""Representation counting for a fixed list of generators.

The count for n is the number of coefficient tuples (x_1, ..., x_k) of
non-negative integers with sum_i a_i x_i = n, one slot per listed
generator.  Every listed generator gets a slot, so a generator that is
redundant for the generated semigroup still raises the counts.
"""

from __future__ import annotations

import os
import threading
from dataclasses import dataclass
from math import gcd
from typing import Iterable, Iterator

from .errors import CapExceededError, PreconditionError

DEFAULT_HORIZON_CAP = 10_000_000
HORIZON_CAP_ENV = "PSEMIGROUPS_HORIZON_CAP"


def horizon_cap() -> int:
    """Largest allowed number of table entries; env var overrides the default."""
    raw = os.environ.get(HORIZON_CAP_ENV)
    if raw is None:
        return DEFAULT_HORIZON_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise PreconditionError(
            f"{HORIZON_CAP_ENV} must be an integer, got {raw!r}"
        ) from None
    if cap < 1:
        raise PreconditionError(f"{HORIZON_CAP_ENV} must be positive, got {cap}")
    return cap


@dataclass(frozen=True)
class GeneratorSet:
    """Validated generator list.

    ``ordered`` preserves the caller's order; representation tuples are
    indexed by it.  Requires at least two pairwise-distinct integers, each
    >= 2, with overall gcd 1 (duplicates would silently change counts, so
    they are rejected rather than removed).
    """

    ordered: tuple[int, ...]

    def __post_init__(self) -> None:
        elems = tuple(self.ordered)
        object.__setattr__(self, "ordered", elems)
        for a in elems:
            if isinstance(a, bool) or not isinstance(a, int):
                raise PreconditionError(f"generators must be integers, got {a!r}")
        if len(elems) < 2:
            raise PreconditionError("need at least two generators")
        if any(a < 2 for a in elems):
            raise PreconditionError("every generator must be at least 2")
        if len(set(elems)) != len(elems):
            raise PreconditionError("duplicate generators are not allowed")
        if gcd(*elems) != 1:
            raise PreconditionError("generators must have gcd 1")

    @property
    def elements(self) -> tuple[int, ...]:
        """Generators in ascending order."""
        return tuple(sorted(self.ordered))

    @property
    def least(self) -> int:
        return min(self.ordered)

    def __iter__(self) -> Iterator[int]:
        return iter(self.ordered)

    def __len__(self) -> int:
        return len(self.ordered)


def as_generator_set(gens: GeneratorSet | Iterable[int]) -> GeneratorSet:
    if isinstance(gens, GeneratorSet):
        return gens
    return GeneratorSet(tuple(gens))


class DenumerantTable:
    """Count table for one generator list, extendable in place.

    One staged array per generator is kept (stage i counts tuples over the
    first i+1 generators only), so growing the horizon fills just the new
    indices for each generator.
    """

    def __init__(
        self,
        generators: GeneratorSet | Iterable[int],
        horizon: int = 0,
        cap: int | None = None,
    ) -> None:
        self.generators = as_generator_set(generators)
        self._cap = horizon_cap() if cap is None else cap
        if horizon < 0:
            raise PreconditionError("horizon must be non-negative")
        self._check_cap(horizon)
        self._stages: list[list[int]] = [[] for _ in self.generators.ordered]
        self._horizon = -1
        self._fill(horizon)

    @property
    def horizon(self) -> int:
        return self._horizon

    @property
    def counts(self) -> tuple[int, ...]:
        """Snapshot of d(0..horizon)."""
        return tuple(self._stages[-1])

    def _check_cap(self, horizon: int) -> None:
        if horizon + 1 > self._cap:
            raise CapExceededError(
                f"denumerant table would need {horizon + 1} entries,"
                f" cap is {self._cap}"
            )

    def _fill(self, new_horizon: int) -> None:
        lo = self._horizon + 1
        if new_horizon < lo:
            return
        for i, a in enumerate(self.generators.ordered):
            stage = self._stages[i]
            prev = self._stages[i - 1] if i else None
            for n in range(lo, new_horizon + 1):
                value = prev[n] if prev is not None else (1 if n == 0 else 0)
                if n >= a:
                    value += stage[n - a]
                stage.append(value)
        self._horizon = new_horizon

    def ensure(self, n: int) -> None:
        """Grow the table (geometrically) so count(n) is available."""
        if n <= self._horizon:
            return
        self._check_cap(n)
        target = min(max(n, 2 * self._horizon + 64), self._cap - 1)
        self._fill(target)

    def count(self, n: int) -> int:
        if n < 0:
            raise PreconditionError("count index must be non-negative")
        if n > self._horizon:
            raise PreconditionError("n exceeds the table horizon; call ensure(n)")
        return self._stages[-1][n]


def build_table(
    gens: GeneratorSet | Iterable[int], horizon: int, cap: int | None = None
) -> DenumerantTable:
    """Table of d(0..horizon) for the given generators."""
    return DenumerantTable(as_generator_set(gens), horizon, cap)


_shared_tables: dict[tuple[int, ...], DenumerantTable] = {}
_shared_lock = threading.Lock()


def denumerant(gens: GeneratorSet | Iterable[int], n: int) -> int:
    """d(n) for the given generators, via a shared extendable table.

    Counts do not depend on generator order, so the cache is keyed by the
    sorted elements.
    """
    A = as_generator_set(gens)
    if n < 0:
        raise PreconditionError("n must be non-negative")
    key = A.elements
    with _shared_lock:
        table = _shared_tables.get(key)
        if table is None:
            table = _shared_tables[key] = DenumerantTable(GeneratorSet(key), n)
        table.ensure(n)
        return table.count(n)


def representations(
    gens: GeneratorSet | Iterable[int], n: int, cap: int | None = None
) -> list[tuple[int, ...]]:
    """All coefficient tuples over the input order summing to n.

    Returned in lexicographic order; the list length equals denumerant(gens, n).
    """
    A = as_generator_set(gens)
    if n < 0:
        raise PreconditionError("n must be non-negative")
    limit = horizon_cap() if cap is None else cap
    if n + 1 > limit:
        raise CapExceededError(f"n = {n} exceeds the configured cap {limit}")
    order = A.ordered
    out: list[tuple[int, ...]] = []
    coeffs = [0] * len(order)

    def descend(i: int, remaining: int) -> None:
        if i == len(order) - 1:
            q, r = divmod(remaining, order[i])
            if r == 0:
                coeffs[i] = q
                out.append(tuple(coeffs))
            return
        for x in range(remaining // order[i] + 1):
            coeffs[i] = x
            descend(i + 1, remaining - x * order[i])

    descend(0, n)
    return out
