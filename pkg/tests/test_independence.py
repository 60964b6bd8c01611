import pytest

from kegraph.errors import BudgetExceeded, DomainError, WorkBudget
from kegraph.generators import complete, cycle, gen_random_ke, path, petersen
from kegraph.graph import Graph, delete_edge, is_independent
from kegraph.independence import (
    alpha_critical_edges,
    core,
    enumerate_independent_sets,
    enumerate_maximum_independent_sets,
    independence_number,
    maximum_independent_set,
    summarize_independence,
)

import oracles


def test_alpha_against_brute_force(small_atlas):
    for g in small_atlas:
        assert independence_number(g) == oracles.alpha(g)
        best = maximum_independent_set(g)
        assert is_independent(g, best) and len(best) == oracles.alpha(g)


def test_alpha_on_random_ke_graphs():
    for seed in range(15):
        g = gen_random_ke(6, 4, 0.5, seed)
        assert independence_number(g) == oracles.alpha(g)


def test_core_against_brute_force(small_atlas):
    for g in small_atlas:
        assert core(g) == oracles.core(g)


@pytest.mark.parametrize("g, expected", [
    (path(3), {0, 2}),
    (cycle(5), set()),
    (complete(3), set()),
    (Graph.empty(2), {0, 1}),
])
def test_core_examples(g, expected):
    assert core(g) == expected


def test_enumerate_maximum_independent_sets():
    found = enumerate_maximum_independent_sets(cycle(5))
    assert len(found) == 5
    assert all(len(s) == 2 for s in found)
    assert found == sorted(found, key=sorted)
    assert len(enumerate_maximum_independent_sets(petersen())) == 5


def test_enumerate_independent_sets(p3):
    found = list(enumerate_independent_sets(p3))
    assert found[0] == frozenset()
    assert sorted(map(sorted, found)) == [[], [0], [0, 2], [1], [2]]


def test_alpha_critical_edges_against_deletion(small_atlas):
    for g in small_atlas:
        a = oracles.alpha(g)
        expected = {e for e in g.edges() if oracles.alpha(delete_edge(g, e)) > a}
        assert alpha_critical_edges(g) == expected


def test_summary(c5):
    summary = summarize_independence(c5, enumerate_omega=True)
    assert summary.alpha == 2
    assert summary.omega_count == 5
    assert summary.core == [] and summary.xi == 0
    assert summary.eta == 5


def test_search_stops_at_budget():
    with pytest.raises(BudgetExceeded):
        independence_number(petersen(), WorkBudget(2))


def test_budget_must_be_positive():
    with pytest.raises(DomainError):
        WorkBudget(0)


def test_budget_accounting():
    budget = WorkBudget(100)
    budget.spend(40)
    assert budget.remaining == 60
    with pytest.raises(BudgetExceeded) as info:
        budget.spend(61)
    assert info.value.limit == 100
