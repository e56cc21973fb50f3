import itertools
import random

import pytest

from totalcolour import (
    CertificationStatus,
    DomainError,
    OracleStatus,
    PreconditionError,
    SearchBudget,
    TotalColouring,
    certify_construction,
    chi_total_bruteforce,
    complete_graph,
    cycle_graph,
    direct_product,
    edgeless_graph,
    exact_chi_total,
    knm_total_colouring,
    make_graph,
    total_graph,
)

from conftest import random_graph

BUDGET = SearchBudget(max_seconds=30.0)


def test_search_budget_needs_a_limit():
    with pytest.raises(DomainError):
        SearchBudget()
    with pytest.raises(DomainError):
        SearchBudget(max_nodes=-1)


def test_total_graph_of_k2_is_a_triangle():
    t = total_graph(complete_graph(2))
    assert t.n == 3
    assert t.edges == frozenset({(0, 1), (0, 2), (1, 2)})
    assert t.labels == ("v0", "v1", "e0-1")


def test_total_graph_of_edgeless_is_edgeless():
    t = total_graph(edgeless_graph(4))
    assert t.n == 4 and not t.edges


def test_total_graph_of_c6_is_4_regular_on_12():
    t = total_graph(cycle_graph(6))
    assert t.n == 12
    assert set(t.degrees) == {4}
    # independent count: each element of a cycle conflicts with exactly 4 others
    g = cycle_graph(6)
    els = list(g.elements())
    from totalcolour import incidence_conflicts

    for a in els:
        assert sum(incidence_conflicts(g, a, b) for b in els if b != a) == 4


def test_exact_2k2_is_type_ii():
    g, _ = direct_product(complete_graph(2), complete_graph(2))
    res = exact_chi_total(g, BUDGET)
    assert res.status is OracleStatus.EXACT
    assert res.chi_total == 3 == g.max_degree + 2


def test_exact_c6_is_type_i():
    res = exact_chi_total(cycle_graph(6), BUDGET)
    assert res.status is OracleStatus.EXACT
    assert res.chi_total == 3


def test_exact_k4xk3():
    g, _ = direct_product(complete_graph(4), complete_graph(3))
    res = exact_chi_total(g, SearchBudget(max_seconds=120.0))
    assert res.status is OracleStatus.EXACT
    assert res.chi_total == 7


def test_exact_empty_graph():
    res = exact_chi_total(edgeless_graph(0), BUDGET)
    assert res.status is OracleStatus.EXACT and res.chi_total == 0


def test_exact_edgeless():
    res = exact_chi_total(edgeless_graph(5), BUDGET)
    assert res.chi_total == 1


def test_timeout_reports_bounds():
    g, _ = direct_product(complete_graph(6), complete_graph(5))
    res = exact_chi_total(g, SearchBudget(max_seconds=0.5))
    assert res.status in (OracleStatus.TIMED_OUT, OracleStatus.LOWER_BOUND_ONLY)
    if res.status is OracleStatus.TIMED_OUT:
        assert res.lower >= g.max_degree + 1
        assert res.upper >= res.lower
        assert res.chi_total is None


def test_zero_budget_gives_lower_bound_only():
    g, _ = direct_product(complete_graph(6), complete_graph(5))
    res = exact_chi_total(g, SearchBudget(max_nodes=0))
    assert res.status is OracleStatus.LOWER_BOUND_ONLY
    assert res.lower == g.max_degree + 1
    assert res.upper == g.element_count()


def test_deterministic_given_fixed_budget():
    g, _ = direct_product(complete_graph(4), complete_graph(3))
    a = exact_chi_total(g, SearchBudget(max_nodes=10_000))
    b = exact_chi_total(g, SearchBudget(max_nodes=10_000))
    assert a == b


def test_bruteforce_small_values():
    assert chi_total_bruteforce(edgeless_graph(3)) == 1
    assert chi_total_bruteforce(complete_graph(2)) == 3
    assert chi_total_bruteforce(cycle_graph(3)) == 3
    assert chi_total_bruteforce(make_graph(3, [(0, 1), (1, 2)])) == 3
    assert chi_total_bruteforce(complete_graph(1)) == 1


def test_bruteforce_caps_element_count():
    with pytest.raises(DomainError):
        chi_total_bruteforce(complete_graph(6), max_elements=10)


def test_cross_validation_sample(rng):
    for _ in range(40):
        g = random_graph(rng, max_n=4)
        if g.element_count() > 8:
            continue
        bf = chi_total_bruteforce(g)
        res = exact_chi_total(g, BUDGET)
        assert res.status is OracleStatus.EXACT
        assert res.chi_total == bf
        if g.edges:
            assert bf >= g.max_degree + 1


def test_certify_knm_43_is_optimal():
    g, _ = direct_product(complete_graph(4), complete_graph(3))
    verdict = certify_construction(g, knm_total_colouring(4, 3), SearchBudget(max_seconds=120.0))
    assert verdict.status is CertificationStatus.OPTIMAL
    assert verdict.colours_used == 7


def test_certify_flags_suboptimal():
    # C6 coloured with 4 colours: vertices alternate 0/1, edges alternate 2/3.
    c6 = cycle_graph(6)
    tc = TotalColouring.from_parts(
        [0, 1, 0, 1, 0, 1],
        {(0, 1): 2, (1, 2): 3, (2, 3): 2, (3, 4): 3, (4, 5): 2, (0, 5): 3},
    )
    verdict = certify_construction(c6, tc, BUDGET)
    assert verdict.status is CertificationStatus.SUBOPTIMAL
    assert verdict.oracle.chi_total == 3
    assert verdict.colours_used == 4


def test_certify_timeout_is_unproven():
    g, _ = direct_product(complete_graph(6), complete_graph(5))
    tc = knm_total_colouring(6, 5)
    verdict = certify_construction(g, tc, SearchBudget(max_nodes=5))
    assert verdict.status is CertificationStatus.VALID_BUT_UNPROVEN
    assert verdict.colours_used == 21


def test_certify_rejects_invalid_colouring():
    c6 = cycle_graph(6)
    tc = TotalColouring.from_parts(
        [0, 0, 0, 0, 0, 0],
        {(0, 1): 1, (1, 2): 1, (2, 3): 1, (3, 4): 1, (4, 5): 1, (0, 5): 1},
    )
    with pytest.raises(PreconditionError):
        certify_construction(c6, tc, BUDGET)


def test_oracle_never_beats_a_verified_colouring(rng):
    """Exact values sit in [max_degree+1, palette of any verified colouring]."""
    for n, m in [(4, 3), (3, 4), (4, 4)]:
        g, _ = direct_product(complete_graph(n), complete_graph(m))
        tc = knm_total_colouring(n, m)
        res = exact_chi_total(g, SearchBudget(max_seconds=120.0))
        assert res.status is OracleStatus.EXACT
        assert g.max_degree + 1 <= res.chi_total <= tc.palette_size
