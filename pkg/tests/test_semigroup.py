"""Numerical semigroup ideal counting, the independent oracle."""

import pytest

from springer_rca import (
    NumericalSemigroup,
    Params,
    SearchBudgetError,
    UnsupportedParametersError,
    compare_with_fixed_points,
    count_ideals,
)
from springer_rca.semigroup import enumerate_gap_sets


def test_membership_and_frobenius():
    gamma = NumericalSemigroup(2, 3)
    assert gamma.frobenius == 1
    assert 0 in gamma and 2 in gamma and 3 in gamma and 100 in gamma
    assert 1 not in gamma and -1 not in gamma
    gamma45 = NumericalSemigroup(4, 5)
    assert gamma45.frobenius == 11
    assert [x for x in range(13) if x not in gamma45] == [1, 2, 3, 6, 7, 11]


def test_non_coprime_rejected():
    with pytest.raises(UnsupportedParametersError):
        NumericalSemigroup(2, 4)


def test_count_examples():
    assert count_ideals(2, 3, 0) == 1
    assert count_ideals(2, 3, 1) == 1
    assert count_ideals(2, 3, 2) == 2


def test_gap_sets_explicit_small():
    # colength 1 forces removing 0; colength 2 removes {0,2} or {0,3}
    [only] = enumerate_gap_sets(2, 3, 1)
    assert only.gaps == frozenset({0})
    pair = {ideal.gaps for ideal in enumerate_gap_sets(2, 3, 2)}
    assert pair == {frozenset({0, 2}), frozenset({0, 3})}


@pytest.mark.parametrize("n,k", [(2, 3), (3, 4), (2, 5)])
def test_enumerated_ideals_are_stable(n, k):
    gamma = NumericalSemigroup(n, k)
    for m in range(6):
        ideals = enumerate_gap_sets(n, k, m)
        assert len({ideal.gaps for ideal in ideals}) == len(ideals)
        for ideal in ideals:
            assert ideal.colength == m
            assert ideal.is_stable(gamma)


def test_budget_error():
    with pytest.raises(SearchBudgetError):
        count_ideals(2, 3, 7, budget=6)


def test_compare_with_fixed_points_examples():
    report = compare_with_fixed_points(Params(2, 3), 8)
    assert report.passed
    assert report.details["ideal_counts"] == [1, 1, 2, 2, 2, 2, 2, 2, 2]
    assert compare_with_fixed_points(Params(3, 4), 6).passed
    assert compare_with_fixed_points(Params(2, 3), 0).passed
