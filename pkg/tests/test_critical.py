import pytest

from kegraph.critical import (
    bipartite_double_cover,
    critical_difference,
    critical_difference_bruteforce,
    critical_independent_sets,
    critical_profile,
    difference,
    find_critical_independent_set,
    has_only_empty_critical,
    in_some_critical_independent_set,
    is_critical,
    is_critical_independent,
    ker,
    max_critical_independent_set_bruteforce,
    maximum_critical_independent_sets,
    require_critical_independent,
)
from kegraph.errors import DomainError
from kegraph.generators import complete, cycle, gen_random_ke, path, star
from kegraph.graph import Graph

import oracles


def test_difference(claw):
    assert difference(claw, [1, 2, 3]) == 2
    assert difference(claw, [0]) == -2
    assert difference(claw, []) == 0


@pytest.mark.parametrize("g, d", [
    (star(3), 2),
    (path(3), 1),
    (path(2), 0),
    (cycle(5), 0),
    (complete(4), 0),
    (Graph.empty(3), 3),
])
def test_critical_difference_examples(g, d):
    assert critical_difference(g) == d


def test_double_cover_has_both_copies_of_each_edge(p3):
    cover = bipartite_double_cover(p3)
    assert (cover.num_u, cover.num_v) == (3, 3)
    assert cover.adj_u == [[1], [0, 2], [1]]


def test_critical_difference_matches_brute_force(small_atlas):
    for g in small_atlas:
        assert critical_difference(g) == oracles.critical_difference(g)
        value, witness = critical_difference_bruteforce(g)
        assert value == critical_difference(g)
        assert difference(g, witness) == value


def test_ker_matches_intersection_of_critical_sets(small_atlas):
    for g in small_atlas:
        assert ker(g) == oracles.ker(g)


@pytest.mark.slow
def test_critical_engine_on_seven_vertices():
    for g in oracles.atlas(7):
        assert critical_difference(g) == oracles.critical_difference(g)
        assert ker(g) == oracles.ker(g)


@pytest.mark.parametrize("g, expected", [
    (star(3), {1, 2, 3}),
    (path(3), {0, 2}),
    (path(2), set()),
    (cycle(5), set()),
])
def test_ker_examples(g, expected):
    assert ker(g) == expected


def test_greedy_set_is_critical_and_contains_ker(small_atlas):
    for g in small_atlas:
        found = find_critical_independent_set(g)
        assert is_critical_independent(g, found)
        assert ker(g) <= found


def test_greedy_set_on_random_graphs():
    for seed in range(10):
        g = gen_random_ke(6, 3, 0.3, seed)
        found = find_critical_independent_set(g)
        assert is_critical_independent(g, found)


def test_membership_in_some_critical_set(small_atlas):
    for g in small_atlas:
        union = set().union(*oracles.critical_independent_sets(g))
        assert {v for v in g.vertices() if in_some_critical_independent_set(g, v)} == union


def test_critical_sets_and_maximum(p3):
    found = critical_independent_sets(p3)
    assert sorted(map(sorted, found)) == [[0, 2]]
    assert max_critical_independent_set_bruteforce(p3) == {0, 2}
    assert maximum_critical_independent_sets(path(2)) == [frozenset({0}), frozenset({1})]


def test_only_empty_critical():
    assert has_only_empty_critical(cycle(5))
    assert has_only_empty_critical(complete(3))
    assert not has_only_empty_critical(path(2))
    assert not has_only_empty_critical(path(3))


def test_is_critical_for_any_vertex_set(p3):
    assert is_critical(p3, [0, 2])
    assert not is_critical(p3, [0, 1])
    assert not is_critical_independent(p3, [1])


def test_require_critical_independent(p3):
    assert require_critical_independent(p3, [0, 2]) == {0, 2}
    with pytest.raises(DomainError):
        require_critical_independent(p3, [0, 1])
    with pytest.raises(DomainError):
        require_critical_independent(p3, [0])
    with pytest.raises(DomainError):
        require_critical_independent(p3, [5])


def test_profile(claw):
    profile = critical_profile(claw, with_max=True)
    assert profile.d == 2
    assert profile.ker == [1, 2, 3]
    assert profile.epsilon == 3
    assert profile.witness == [1, 2, 3]
    assert profile.max_crit_size == 3
