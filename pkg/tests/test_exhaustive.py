"""Bit-parallel tournament scans against the per-instance solver."""

import numpy as np
import pytest

from biramsey.exhaustive import (
    every_tournament_contains_tt,
    min_max_transitive_over_tournaments,
    tournament_from_code,
    tournament_to_code,
    transitive_subset_census,
    tt_free_tournament_codes,
)
from biramsey.solvers import (
    BudgetExceeded,
    brute_force_F,
    max_transitive_set,
    max_transitive_set_by_enumeration,
)


def test_code_round_trip():
    for code in (0, 1, 37, 63):
        d = tournament_from_code(code, 4)
        assert d.is_tournament()
        assert tournament_to_code(d) == code


def test_scan_agrees_with_oracle_at_order_4():
    # dual route: the all-oneway cell of the worst-case table
    value, inst = min_max_transitive_over_tournaments(4)
    assert value == brute_force_F(4, 6).value == 3
    assert max_transitive_set(inst).size == 3


def test_census_matches_solver_on_sampled_codes():
    census = transitive_subset_census(5)
    rng = np.random.default_rng(11)
    for code in rng.integers(0, 1 << 10, size=40).tolist():
        d = tournament_from_code(int(code), 5)
        expected = max_transitive_set(d).size
        by_census = max(k for k in range(2, 6) if k == 2 or census[k][code])
        assert by_census == expected


def test_min_max_transitive_order_7_is_3():
    value, inst = min_max_transitive_over_tournaments(7)
    assert value == 3
    assert max_transitive_set(inst).size == 3
    assert max_transitive_set_by_enumeration(inst) == 3


def test_tt4_free_seven_tournaments():
    free = tt_free_tournament_codes(7, 4)
    assert free.size == 240  # one isomorphism class, automorphism group 21
    for code in free[:3].tolist() + free[-2:].tolist():
        d = tournament_from_code(int(code), 7)
        assert max_transitive_set(d).size == 3


def test_every_tournament_contains_tt():
    assert every_tournament_contains_tt(4, 3)  # 2^6 codes
    assert not every_tournament_contains_tt(3, 3)  # the directed triangle
    assert not every_tournament_contains_tt(7, 4)  # the 240 scanned codes
    assert every_tournament_contains_tt(8, 4)  # extension argument
    assert not every_tournament_contains_tt(2, 3)


def test_scan_order_cap():
    with pytest.raises(BudgetExceeded):
        transitive_subset_census(8)
    with pytest.raises(BudgetExceeded):
        every_tournament_contains_tt(9, 5)
