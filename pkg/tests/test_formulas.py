from math import comb

import pytest

from distgraphs.build import build_gn, build_nagy
from distgraphs.formulas import (alpha_formula, c_const, ceil_div, chi_lower_bound, dominant_branch,
                                 lemma1_bound, nagy_alpha, prop9_check, switch_index)
from distgraphs.solver import max_independent_set


@pytest.mark.parametrize("n,c", [(8, 0), (9, 1), (10, 2), (11, 2), (12, 0), (1, 1), (3, 2)])
def test_c_const(n, c):
    assert c_const(n) == c


@pytest.mark.parametrize("n,alpha", [(10, 32), (12, 48), (7, 20), (9, 32), (11, 38), (13, 50), (14, 56)])
def test_alpha_formula_examples(n, alpha):
    assert alpha_formula(n) == alpha


def test_alpha_formula_twenty():
    assert 6 * 20 - 28 == 92 and 4 * 20 - 4 * 0 == 80
    assert alpha_formula(20) == 92


@pytest.mark.parametrize("n", range(3, 8))
def test_alpha_formula_matches_solver(n):
    assert max_independent_set(build_gn(n)).alpha == alpha_formula(n)


def test_alpha_formula_non_decreasing():
    vals = [alpha_formula(n) for n in range(3, 200)]
    assert vals == sorted(vals)


def test_branch_switch():
    # against the full formula the cobra term takes over at n = 13
    assert dominant_branch(12) == "quad" and dominant_branch(13) == "cobra"
    assert switch_index() == 13
    # against plain 4n: tie at 14, strict from 15
    assert dominant_branch(14, "4n") == "tie"
    assert switch_index("4n") == 15


@pytest.mark.parametrize("n,bound", [(9, 21), (10, 30), (11, 35), (12, 37), (3, 2)])
def test_chi_bounds(n, bound):
    assert chi_lower_bound(n).bound == bound


def test_chi_literal_denominator_does_not_reproduce_listed_values():
    literal = [ceil_div(8 * comb(n, 3), max(6 * n - 28, 4 * n - c_const(n))) for n in (9, 10, 11, 12)]
    assert literal != [21, 30, 35, 37]


@pytest.mark.parametrize("n", range(3, 51))
def test_chi_bound_invariants(n):
    b = chi_lower_bound(n)
    assert b.order == 8 * comb(n, 3)
    assert b.check()


@pytest.mark.parametrize("n,alpha", [(7, 5), (8, 8), (4, 4)])
def test_nagy_alpha(n, alpha):
    assert nagy_alpha(n) == alpha


@pytest.mark.parametrize("n", range(3, 11))
def test_nagy_alpha_matches_solver(n):
    assert max_independent_set(build_nagy(n)).alpha == nagy_alpha(n)


def test_lemma1_examples():
    r = lemma1_bound(7, 1, 20)
    assert (r.a_min, r.m, r.verdict) == (5, 13, True)
    assert 3 * (20 - 2) == 54  # 54/13 is just above 4
    r = lemma1_bound(14, 0, 56)
    assert (r.a_min, r.verdict) == (6, True)
    r = lemma1_bound(7, 2, 20)
    assert (r.a_min, r.m, r.verdict) == (4, 12, True)
    with pytest.raises(ValueError):
        lemma1_bound(7, 14, 20)


@pytest.mark.parametrize("n", [7, 9, 10, 11, 13])
def test_lemma1_holds_for_all_k(n):
    for k in range(2 * n):
        assert lemma1_bound(n, k, alpha_formula(n)).verdict


def test_prop9():
    r = prop9_check()
    assert r.s1_size == 56 == comb(8, 3)
    assert (r.covered_if_missing_first, r.covered_otherwise) == (8, 5)
    assert set(r.solutions) == {(14, 0), (9, 8), (4, 16)}
    assert r.pairs_total == 21
    assert r.contradiction
    assert r.chi_bound == 22
