import pytest

from kegraph.analysis import GraphFacts
from kegraph.errors import DomainError
from kegraph.generators import (
    FAMILIES,
    complete,
    complete_bipartite,
    complete_minus_edge,
    cycle,
    gen_gpq,
    gen_hk,
    gen_random_ke,
    generate,
    path,
    petersen,
    star,
)
from kegraph.graph import edges_between

from oracles import alpha, is_ke, mu


def test_basic_families():
    assert (cycle(6).n, cycle(6).m) == (6, 6)
    assert (path(1).n, path(1).m) == (1, 0)
    assert complete(5).m == 10
    assert (star(3).n, star(3).m) == (4, 3)
    assert complete_bipartite(2, 3).m == 6
    g = complete_minus_edge(5)
    assert g.m == 9 and not g.has_edge(3, 4)


def test_petersen():
    g = petersen()
    assert (g.n, g.m) == (10, 15)
    assert all(g.degree(v) == 3 for v in g.vertices())
    assert (alpha(g), mu(g)) == (4, 5)


@pytest.mark.parametrize("build, args", [
    (cycle, (2,)),
    (path, (0,)),
    (complete, (0,)),
    (star, (0,)),
    (complete_bipartite, (0, 2)),
    (gen_gpq, (3, 1)),
    (gen_gpq, (2, 3)),
    (gen_hk, (0,)),
])
def test_out_of_range_parameters(build, args):
    with pytest.raises(DomainError):
        build(*args)


@pytest.mark.parametrize("s, a, p", [(3, 4, 0.5), (4, 0, 0.5), (4, 2, 1.5)])
def test_random_ke_parameters(s, a, p):
    with pytest.raises(DomainError):
        gen_random_ke(s, a, p, seed=0)


@pytest.mark.parametrize("seed", range(20))
def test_random_ke_graphs_are_ke(seed):
    g = gen_random_ke(5, 3, 0.4, seed)
    assert g.n == 8
    assert is_ke(g)
    assert all(not g.has_edge(x, y) for x in range(5) for y in range(5))


def test_random_ke_is_deterministic():
    assert gen_random_ke(6, 4, 0.5, 7) == gen_random_ke(6, 4, 0.5, 7)
    assert len({gen_random_ke(6, 4, 0.5, seed) for seed in range(10)}) > 1


def test_random_ke_extremes():
    sparse = gen_random_ke(4, 2, 0.0, 3)
    assert sparse.m == 2
    dense = gen_random_ke(3, 3, 1.0, 3)
    assert dense.m == 3 * 3 + 3


@pytest.mark.parametrize("p, q", [(p, q) for p in range(2, 7) for q in range(2, p + 1)])
def test_gpq_mu_critical_edges_in_core_pocket(p, q):
    g = gen_gpq(p, q)
    facts = GraphFacts(g)
    assert facts.is_ke
    b = {g.vertex(f"b{i + 1}") for i in range(p)}
    assert facts.core == b
    assert facts.ker == frozenset()
    pocket = set(edges_between(g, facts.core, facts.core_neighborhood))
    assert len(facts.mu_critical_edges & pocket) == p - q
    assert g.m - facts.rho_e == p - q


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_hk(k):
    g = gen_hk(k)
    facts = GraphFacts(g)
    assert (g.n, g.m) == (2 * k + 2, 2 * k + 2)
    assert facts.is_ke
    assert facts.core == {g.vertex("w")}
    assert facts.ker == frozenset()
    pocket = set(edges_between(g, facts.core, facts.core_neighborhood))
    assert len(facts.mu_critical_edges & pocket) == 1
    assert facts.rho_e == g.m - 1
    assert facts.rho_v == g.n - 1


def test_generate_seeded_family_uses_consecutive_seeds():
    graphs = generate("ke", ["5", "3", "0.4"], count=3, seed=2)
    assert graphs == [gen_random_ke(5, 3, 0.4, s) for s in (2, 3, 4)]


def test_generate_plain_family():
    assert generate("cycle", ["5"], count=2) == [cycle(5), cycle(5)]
    assert generate("petersen", []) == [petersen()]


@pytest.mark.parametrize("family, params", [
    ("nope", []),
    ("cycle", []),
    ("cycle", ["five"]),
    ("gpq", ["4"]),
])
def test_generate_usage_errors(family, params):
    with pytest.raises(DomainError):
        generate(family, params)


def test_every_family_has_usage():
    assert all(f.usage.startswith(name) for name, f in FAMILIES.items())


def test_gpq_checks_its_mu_critical_edges(monkeypatch):
    monkeypatch.setattr("kegraph.generators.mu_critical_edges", lambda g: frozenset())
    with pytest.raises(RuntimeError):
        gen_gpq(4, 2)
    assert gen_gpq(2, 2).n == 4
