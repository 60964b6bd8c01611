import random
from itertools import combinations

import pytest

from kegraph.errors import BudgetExceeded, DomainError, WorkBudget
from kegraph.generators import complete, complete_bipartite, cycle, gen_random_ke, path, petersen
from kegraph.graph import Graph
from kegraph.matching import (
    BipartiteGraph,
    HopcroftKarp,
    Matching,
    enumerate_maximum_matchings,
    matching_number,
    max_matching,
    max_matching_bipartite,
    maximum_matchings,
    mu_critical_edges,
    mu_critical_vertices,
    sample_maximum_matchings,
    unique_perfect_matching_between,
)
from kegraph.schemas import PairingKind

import oracles


def _is_matching_of(g: Graph, m: Matching) -> bool:
    ends = [v for e in m.edges for v in e]
    return len(ends) == len(set(ends)) and all(g.has_edge(u, v) for u, v in m.edges)


def test_matching_number_against_networkx(small_atlas):
    for g in small_atlas:
        found = max_matching(g)
        assert _is_matching_of(g, found)
        assert len(found) == oracles.mu(g)


def test_matching_number_on_random_graphs():
    rng = random.Random(11)
    for _ in range(40):
        n = rng.randint(8, 18)
        edges = [(u, v) for v in range(n) for u in range(v) if rng.random() < 0.25]
        g = Graph.from_edges(n, edges)
        assert matching_number(g) == oracles.mu(g)


def test_odd_cycles_need_blossoms():
    assert matching_number(cycle(7)) == 3
    assert matching_number(petersen()) == 5


def test_from_pairs_rejects_shared_vertices():
    with pytest.raises(DomainError):
        Matching.from_pairs([(0, 1), (1, 2)])
    m = Matching.from_pairs([(3, 1)])
    assert (1, 3) in m and m.saturates(3) and m.mate_map() == {1: 3, 3: 1}


def test_hopcroft_karp():
    bg = BipartiteGraph(3, 3, [(0, 0), (0, 1), (1, 0), (2, 1), (2, 2)])
    pairs = HopcroftKarp(bg)()
    assert len(pairs) == 3
    assert len({u for u, _ in pairs}) == len({v for _, v in pairs}) == 3


def test_max_matching_bipartite_uses_only_cross_edges():
    g = complete(4)
    m = max_matching_bipartite(g, [0, 1], [2, 3])
    assert len(m) == 2
    assert all((u in (0, 1)) != (v in (0, 1)) for u, v in m.edges)
    with pytest.raises(DomainError):
        max_matching_bipartite(g, [0, 1], [1, 2])


def test_mu_critical_vertices(p3):
    assert mu_critical_vertices(p3) == {1}
    assert mu_critical_vertices(cycle(4)) == set(range(4))
    assert mu_critical_vertices(cycle(5)) == frozenset()


def test_mu_critical_edges():
    assert mu_critical_edges(path(2)) == {(0, 1)}
    assert mu_critical_edges(path(3)) == frozenset()
    assert mu_critical_edges(cycle(4)) == frozenset()
    assert mu_critical_edges(path(4)) == {(0, 1), (2, 3)}


def test_mu_critical_edges_against_enumeration(small_atlas):
    for g in small_atlas:
        everything = oracles.maximum_matchings(g)
        expected = frozenset.intersection(*everything) if g.m else frozenset()
        assert mu_critical_edges(g) == expected


def test_unique_perfect_matching_kinds(p3):
    square = cycle(4)
    multiple = unique_perfect_matching_between(square, [0, 2], [1, 3])
    assert multiple.kind == PairingKind.MULTIPLE
    assert multiple.first != multiple.second
    assert len(multiple.first) == len(multiple.second) == 2

    unique = unique_perfect_matching_between(path(4), [0, 2], [1, 3])
    assert unique.kind == PairingKind.UNIQUE
    assert unique.first.edges == {(0, 1), (2, 3)}

    assert unique_perfect_matching_between(p3, [0, 2], [1]).kind == PairingKind.NONE

    cherry = Graph.from_edges(4, [(0, 1), (0, 2)])
    assert unique_perfect_matching_between(cherry, [1, 2], [0, 3]).kind == PairingKind.NON_PERFECT

    assert unique_perfect_matching_between(p3, [], []).kind == PairingKind.UNIQUE


def test_unique_perfect_matching_second_witness_is_valid():
    g = complete_bipartite(3, 3)
    verdict = unique_perfect_matching_between(g, [0, 1, 2], [3, 4, 5])
    assert verdict.kind == PairingKind.MULTIPLE
    for m in (verdict.first, verdict.second):
        assert _is_matching_of(g, m) and len(m) == 3


@pytest.mark.parametrize("g, count", [
    (path(3), 2),
    (cycle(4), 2),
    (cycle(5), 5),
    (complete(4), 3),
    (Graph.empty(3), 1),
])
def test_enumerate_maximum_matchings_counts(g, count):
    assert len(enumerate_maximum_matchings(g)) == count


def test_enumerate_maximum_matchings_against_brute_force(small_atlas):
    for g in small_atlas:
        found = {m.edges for m in enumerate_maximum_matchings(g)}
        assert found == set(oracles.maximum_matchings(g))


def test_enumeration_spends_budget():
    with pytest.raises(BudgetExceeded):
        enumerate_maximum_matchings(complete(8), WorkBudget(10))


def test_samples_are_maximum_and_deterministic():
    g = gen_random_ke(7, 5, 0.5, 3)
    first = sample_maximum_matchings(g, count=20, seed=4)
    assert first == sample_maximum_matchings(g, count=20, seed=4)
    mu = matching_number(g)
    assert all(len(m) == mu and _is_matching_of(g, m) for m in first)
    assert len({m.edges for m in first}) == len(first)


def test_maximum_matchings_switches_to_sampling():
    g = cycle(6)
    exact, is_exact = maximum_matchings(g, exact_max_n=6)
    assert is_exact and len(exact) == 2
    sampled, is_exact = maximum_matchings(g, exact_max_n=5, samples=30)
    assert not is_exact
    assert {m.edges for m in sampled} <= {m.edges for m in exact}


def test_pairing_kind_agrees_with_counting(small_atlas):
    for g in small_atlas:
        for a in oracles.subsets(g.n):
            if len(a) > g.n // 2:
                continue
            rest = [v for v in range(g.n) if v not in a]
            for b in map(frozenset, combinations(rest, len(a))):
                count = oracles.perfect_matchings_between(g, a, b)
                verdict = unique_perfect_matching_between(g, a, b)
                if count == 0:
                    assert verdict.kind == PairingKind.NON_PERFECT, (g, a, b)
                    continue
                assert verdict.kind == (PairingKind.UNIQUE if count == 1 else PairingKind.MULTIPLE), (g, a, b)
                assert set(verdict.first.saturated) == a | b
                if count > 1:
                    assert set(verdict.second.saturated) == a | b
                    assert verdict.second.edges != verdict.first.edges


def test_pairing_of_unequal_sets_is_none(small_atlas):
    for g in small_atlas:
        if g.n >= 3:
            assert unique_perfect_matching_between(g, [0], [1, 2]).kind == PairingKind.NONE
