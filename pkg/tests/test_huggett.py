import math
import time
from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, strategies as st

from statmech import enumerate_gamma, enumerate_z, equivalence_check, frequency_table
from statmech.exceptions import EnumerationBudgetError, InfeasibleError, InvalidArgumentError
from statmech.huggett import gamma_count, z_count


def test_coin_figures():
    assert len(enumerate_gamma(2, 2)) == 4
    assert enumerate_gamma(2, 2) == [(0, 0), (0, 1), (1, 0), (1, 1)]
    assert enumerate_gamma(2, 2, impenetrable=True) == [(0, 1), (1, 0)]
    assert enumerate_z(2, 2) == [(2, 0), (1, 1), (0, 2)]
    assert enumerate_z(2, 2, impenetrable=True) == [(1, 1)]


def test_three_in_five():
    assert len(enumerate_gamma(3, 5, True)) == 60
    assert len(enumerate_z(3, 5, True)) == 10


def test_frequency_table_examples():
    t = frequency_table(2, 2, True)
    assert t.row((1, 1)).gamma_frequency == Fraction(2, 2) == 1
    assert t.row((1, 1)).z_frequency == 1
    t = frequency_table(2, 2, False)
    assert t.row((1, 1)).gamma_frequency == Fraction(1, 2)
    assert t.row((1, 1)).z_frequency == Fraction(1, 3)
    t = frequency_table(3, 5, True)
    assert all(r.gamma_frequency == Fraction(6, 60) == r.z_frequency for r in t.rows)


@pytest.mark.parametrize("n, k", [(1, 1), (2, 3), (3, 3), (2, 4), (4, 4)])
def test_count_identities(n, k):
    for imp in (False, True):
        if imp and n > k:
            continue
        assert len(enumerate_gamma(n, k, imp)) == gamma_count(n, k, imp)
        assert len(enumerate_z(n, k, imp)) == z_count(n, k, imp)
    assert gamma_count(n, k, False) == k**n
    assert gamma_count(n, k, True) == math.factorial(k) // math.factorial(k - n)
    assert z_count(n, k, False) == math.comb(n + k - 1, n)
    assert z_count(n, k, True) == math.comb(k, n)


@given(n=st.integers(1, 4), k=st.integers(1, 5), imp=st.booleans())
def test_frequencies_sum_to_one(n, k, imp):
    if imp and n > k:
        return
    t = frequency_table(n, k, imp)
    assert sum(r.gamma_frequency for r in t.rows) == 1
    assert sum(r.z_frequency for r in t.rows) == 1
    for r in t.rows:
        assert sum(r.occupancy) == n
        assert isinstance(r.gamma_frequency, Fraction)


@given(n=st.integers(1, 4), k=st.integers(1, 4), data=st.data())
def test_gamma_frequency_permutation_symmetric(n, k, data):
    t = frequency_table(n, k, False)
    perm = data.draw(st.sampled_from(list(permutations(range(k)))))
    for r in t.rows:
        relabelled = tuple(r.occupancy[perm[i]] for i in range(k))
        assert t.row(relabelled).gamma_frequency == r.gamma_frequency


def test_full_occupancy_single_vector():
    for n in range(1, 6):
        t = frequency_table(n, n, True)
        assert len(t.rows) == 1
        assert t.rows[0].gamma_frequency == t.rows[0].z_frequency == 1


def test_equivalence_grid():
    start = time.perf_counter()
    rep = equivalence_check(6, 8)
    assert time.perf_counter() - start < 10
    assert rep.holds
    assert rep.counterexamples == []
    assert len(rep.cells) == sum(1 for n in range(1, 7) for k in range(n, 9))
    assert rep.control_disagrees is True
    row = rep.negative_control.row((1, 1))
    assert (row.gamma_frequency, row.z_frequency) == (Fraction(1, 2), Fraction(1, 3))


def test_errors():
    with pytest.raises(InfeasibleError):
        enumerate_gamma(3, 2, impenetrable=True)
    with pytest.raises(InfeasibleError):
        enumerate_z(3, 2, impenetrable=True)
    with pytest.raises(EnumerationBudgetError):
        enumerate_gamma(10, 10, budget=1000)
    with pytest.raises(EnumerationBudgetError):
        enumerate_z(10, 10, budget=1000)
    with pytest.raises(InvalidArgumentError):
        enumerate_gamma(0, 2)
