"""Exact enumeration of labelled assignments versus occupancy distributions.

``n`` systems are placed in ``k`` states.  An *arrangement* records which
labelled system sits in which state; an *occupancy vector* only records how
many systems each state holds.  Under the impenetrability constraint (at most
one system per state) every occupancy vector is realised by the same number
of arrangements, so the frequency of a distribution is identical whether one
counts arrangements uniformly or occupancy vectors uniformly.  This module
checks that claim by brute force with exact rationals; no floating point is
used anywhere.

Ordering is fixed: arrangements are lexicographic, occupancy vectors follow
the lexicographic order of the sorted state multisets they describe, so for
``n = k = 2`` they come out as ``(2, 0), (1, 1), (0, 2)``.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from .exceptions import EnumerationBudgetError, InfeasibleError, InvalidArgumentError

DEFAULT_BUDGET = 10**7


def _check(n, k, impenetrable):
    for name, v in (("n", n), ("k", k)):
        if not (isinstance(v, int) and v >= 1):
            raise InvalidArgumentError(f"{name} must be an integer >= 1, got {v!r}")
    if impenetrable and n > k:
        raise InfeasibleError(f"{n} impenetrable systems cannot fit in {k} states")


def gamma_count(n: int, k: int, impenetrable: bool) -> int:
    return math.perm(k, n) if impenetrable else k**n


def z_count(n: int, k: int, impenetrable: bool) -> int:
    return math.comb(k, n) if impenetrable else math.comb(n + k - 1, n)


def enumerate_gamma(n: int, k: int, impenetrable: bool = False,
                    budget: int = DEFAULT_BUDGET) -> list[tuple[int, ...]]:
    """All assignments of ``n`` labelled systems to ``k`` states, lexicographic."""
    _check(n, k, impenetrable)
    size = gamma_count(n, k, impenetrable)
    if size > budget:
        raise EnumerationBudgetError(f"{size} arrangements exceeds budget {budget}")
    if impenetrable:
        return list(itertools.permutations(range(k), n))
    return list(itertools.product(range(k), repeat=n))


def _counts(states, k):
    vec = [0] * k
    for s in states:
        vec[s] += 1
    return tuple(vec)


def enumerate_z(n: int, k: int, impenetrable: bool = False,
                budget: int = DEFAULT_BUDGET) -> list[tuple[int, ...]]:
    """All occupancy vectors of length ``k`` summing to ``n``."""
    _check(n, k, impenetrable)
    size = z_count(n, k, impenetrable)
    if size > budget:
        raise EnumerationBudgetError(f"{size} occupancy vectors exceeds budget {budget}")
    if impenetrable:
        multisets = itertools.combinations(range(k), n)
    else:
        multisets = itertools.combinations_with_replacement(range(k), n)
    return [_counts(m, k) for m in multisets]


@dataclass(frozen=True)
class FrequencyRow:
    occupancy: tuple[int, ...]
    gamma_frequency: Fraction
    z_frequency: Fraction

    @property
    def agrees(self) -> bool:
        return self.gamma_frequency == self.z_frequency


@dataclass(frozen=True)
class FrequencyTable:
    n: int
    k: int
    impenetrable: bool
    rows: tuple[FrequencyRow, ...]

    @property
    def regime(self) -> str:
        return "impenetrable" if self.impenetrable else "unconstrained"

    def row(self, occupancy) -> FrequencyRow:
        occupancy = tuple(occupancy)
        for r in self.rows:
            if r.occupancy == occupancy:
                return r
        raise KeyError(occupancy)


def frequency_table(n: int, k: int, impenetrable: bool = False,
                    budget: int = DEFAULT_BUDGET) -> FrequencyTable:
    """Frequency of every occupancy vector under uniform measures on both spaces."""
    arrangements = enumerate_gamma(n, k, impenetrable, budget)
    vectors = enumerate_z(n, k, impenetrable, budget)
    realised = Counter(_counts(a, k) for a in arrangements)
    n_gamma = len(arrangements)
    z_freq = Fraction(1, len(vectors))
    rows = tuple(
        FrequencyRow(v, Fraction(realised[v], n_gamma), z_freq) for v in vectors
    )
    return FrequencyTable(n, k, impenetrable, rows)


@dataclass(frozen=True)
class Counterexample:
    n: int
    k: int
    occupancy: tuple[int, ...]
    gamma_frequency: Fraction
    z_frequency: Fraction


@dataclass
class EquivalenceReport:
    n_max: int
    k_max: int
    cells: list[tuple[int, int, int]] = field(default_factory=list)
    counterexamples: list[Counterexample] = field(default_factory=list)
    negative_control: FrequencyTable | None = None

    @property
    def holds(self) -> bool:
        return not self.counterexamples

    @property
    def control_disagrees(self) -> bool | None:
        if self.negative_control is None:
            return None
        return any(not r.agrees for r in self.negative_control.rows)


def equivalence_check(n_max: int, k_max: int, negative_control: tuple[int, int] | None = (2, 2),
                      budget: int = DEFAULT_BUDGET) -> EquivalenceReport:
    """Check gamma- and Z-frequencies agree for every impenetrable ``(n, k)``.

    Cells are visited in ``(n, k)`` order for ``1 <= n <= min(n_max, k)`` and
    ``k <= k_max``; ``cells`` records ``(n, k, number_of_vectors)``.  The
    unconstrained ``negative_control`` cell is expected to disagree.
    """
    report = EquivalenceReport(n_max, k_max)
    for n in range(1, n_max + 1):
        for k in range(n, k_max + 1):
            table = frequency_table(n, k, True, budget)
            report.cells.append((n, k, len(table.rows)))
            for r in table.rows:
                if not r.agrees:
                    report.counterexamples.append(
                        Counterexample(n, k, r.occupancy, r.gamma_frequency, r.z_frequency)
                    )
    if negative_control is not None:
        report.negative_control = frequency_table(*negative_control, False, budget)
    return report
