import pytest

from kegraph.analysis import (
    GraphFacts,
    build_report,
    classify_edges,
    classify_vertices,
    critical_decomposition,
    formula_checks,
    is_almost_bipartite,
    is_bipartite,
    is_ke,
    ke_class,
    open_problem_flags,
    rho_e,
    rho_e_bound,
    rho_v,
    rho_v_formula,
    shortest_odd_cycle,
)
from kegraph.errors import DomainError
from kegraph.gallery import gallery_fixture
from kegraph.generators import complete, complete_bipartite, cycle, gen_gpq, gen_random_ke, path, petersen, star
from kegraph.graph import Graph
from kegraph.schemas import EdgeLocation, KEKind, KEReport, PairingKind, VertexZone

import oracles


@pytest.mark.parametrize("g, kind", [
    (path(5), KEKind.BIPARTITE),
    (star(4), KEKind.BIPARTITE),
    (Graph.empty(0), KEKind.BIPARTITE),
    (cycle(5), KEKind.ONE_KE),
    (cycle(7), KEKind.ONE_KE),
    (complete(4), KEKind.ONE_KE),
    (complete(5), KEKind.OTHER),
    (petersen(), KEKind.ONE_KE),
])
def test_ke_class(g, kind):
    assert ke_class(g).kind == kind


def test_ke_class_of_non_bipartite_ke_graph(k4_minus_edge, paw):
    assert ke_class(k4_minus_edge).kind == KEKind.KE_NON_BIPARTITE
    assert is_ke(paw) and not is_bipartite(paw)


def test_ke_class_matches_brute_force(small_atlas):
    for g in small_atlas:
        assert is_ke(g) == oracles.is_ke(g)


def test_bipartite_and_odd_cycles(c5, paw):
    assert is_bipartite(cycle(6))
    assert not is_bipartite(c5)
    assert shortest_odd_cycle(cycle(6)) is None
    assert sorted(shortest_odd_cycle(c5)) == [0, 1, 2, 3, 4]
    triangle = shortest_odd_cycle(paw)
    assert len(triangle) == 3
    assert paw.vertex("v1") not in triangle


@pytest.mark.parametrize("g, expected", [
    (cycle(5), True),
    (cycle(6), False),
    (complete(4), False),
    (gallery_fixture("paw").graph, True),
    (gallery_fixture("diamond").graph, False),
])
def test_almost_bipartite(g, expected):
    assert is_almost_bipartite(g) == expected


def test_almost_bipartite_size_limit():
    with pytest.raises(DomainError):
        is_almost_bipartite(cycle(17))


def test_heredity_numbers_of_small_graphs(c5, k4_minus_edge):
    assert rho_v(c5) == 5 and rho_e(c5) == 5
    assert rho_v(complete(3)) == 3
    assert rho_v(complete(4)) == 0
    assert rho_v_formula(k4_minus_edge) == 2 == rho_v(k4_minus_edge)
    assert rho_v_formula(cycle(4)) == 4


@pytest.mark.parametrize("g", [path(4), cycle(6), complete_bipartite(2, 3), star(3)])
def test_bipartite_graphs_keep_everything(g):
    assert rho_v(g) == g.n == rho_v_formula(g)
    assert rho_e(g) == g.m == rho_e_bound(g)


def test_formulas_need_ke_input(c5):
    with pytest.raises(DomainError):
        rho_v_formula(c5)
    with pytest.raises(DomainError):
        rho_e_bound(c5)
    with pytest.raises(DomainError):
        classify_vertices(c5)


def test_vertex_trichotomy_on_paw(paw):
    verdicts = {v.label: v for v in classify_vertices(paw)}
    assert verdicts["v1"].zone == VertexZone.CORE_MINUS_KER
    assert verdicts["v1"].deletion_class.kind == KEKind.ONE_KE
    for name in ("v2", "v3", "v4"):
        assert verdicts[name].zone == VertexZone.OUTSIDE_CORE
        assert verdicts[name].deletion_class.is_ke
    assert all(v.consistent for v in verdicts.values())


def test_edges_of_non_ke_graph_get_raw_flags_only():
    g = gallery_fixture("one-ke-edge-pair").graph
    verdicts = {(e.u, e.v): e for e in classify_edges(g)}
    assert all(e.location is None for e in verdicts.values())
    assert not verdicts[(g.vertex("p2"), g.vertex("p3"))].deletion_is_ke
    assert verdicts[(g.vertex("p3"), g.vertex("p4"))].deletion_is_ke


def test_edge_localization_on_gpq():
    g = gen_gpq(4, 2)
    verdicts = classify_edges(g)
    critical = [e for e in verdicts if e.mu_critical]
    assert all(e.location != EdgeLocation.KER_POCKET for e in critical)
    assert all(e.location != EdgeLocation.CORE_MINUS_KER_TO_KER_N for e in critical)
    assert sum(1 for e in critical if e.location == EdgeLocation.CROSS_POCKET) == 2
    outside = [e for e in verdicts if e.location == EdgeLocation.OUTSIDE_CORE_POCKET]
    assert outside and all(e.deletion_is_ke for e in outside)


def test_critical_decomposition_of_star(claw):
    split = critical_decomposition(claw, [1, 2, 3])
    assert split.inside.graph.n == 4
    assert split.outside.graph.n == 0
    assert split.checks.all_pass


def test_critical_decomposition_with_empty_set(c5):
    split = critical_decomposition(c5, [])
    assert split.inside.graph.n == 0
    assert split.outside.graph == c5
    assert split.checks.all_pass


def test_critical_decomposition_of_chain():
    g = gallery_fixture("core-ker-chain").graph
    chosen = [g.vertex(x) for x in ("a", "b", "c", "v")]
    split = critical_decomposition(g, chosen)
    assert split.checks.all_pass
    assert split.inside.graph.n == 4 + 2


def test_critical_decomposition_preconditions(p3):
    with pytest.raises(DomainError):
        critical_decomposition(p3, [0, 1])
    with pytest.raises(DomainError):
        critical_decomposition(p3, [0])


def _assert_headline(g: Graph):
    facts = GraphFacts(g)
    if not facts.is_ke:
        return False
    assert facts.rho_v == g.n - facts.xi + facts.epsilon
    bound = g.m - facts.xi + facts.epsilon
    assert facts.rho_e >= bound
    assert (facts.rho_e == bound) == (facts.cross_pocket.kind == PairingKind.UNIQUE)
    assert g.n - facts.rho_v >= g.m - facts.rho_e
    assert all(v.consistent for v in classify_vertices(g))
    return True


def test_heredity_formulas_on_atlas(small_atlas):
    checked = sum(1 for g in small_atlas if _assert_headline(g))
    assert checked > 50


def test_heredity_formulas_on_random_ke_graphs():
    for seed in range(30):
        assert _assert_headline(gen_random_ke(5, 3, 0.35, seed))


@pytest.mark.slow
def test_heredity_formulas_on_seven_vertices_and_more_random_graphs():
    for g in oracles.atlas(7):
        _assert_headline(g)
    for seed in range(500):
        assert _assert_headline(gen_random_ke(6, 4, 0.3, seed))


def test_report_of_odd_cycle(c5):
    report = build_report(c5)
    assert report.graph6 == "Dhc"
    assert (report.rho_v, report.rho_e) == (5, 5)
    assert report.ke_class.kind == KEKind.ONE_KE
    assert report.formulas.rho_v_formula is None
    assert report.edges and all(e.location is None for e in report.edges)
    assert report.open_problem_flags == ["rho_e_bound_holds", "rho_v_formula_holds"]


def test_report_of_ke_graph(k4_minus_edge):
    report = build_report(k4_minus_edge)
    assert report.core == [2, 3] and report.ker == []
    assert (report.xi, report.epsilon, report.d) == (2, 0, 0)
    assert report.formulas.rho_v_equality is True
    assert report.formulas.rho_e_lower_bound is True
    assert report.open_problem_flags == []
    assert KEReport.model_validate_json(report.model_dump_json()) == report
    assert len(report.csv_row()) == len(KEReport.csv_header())


def test_formula_checks_are_empty_for_non_ke_graphs(c5):
    assert formula_checks(GraphFacts(c5)).rho_e_bound is None
    assert open_problem_flags(GraphFacts(cycle(4))) == []
