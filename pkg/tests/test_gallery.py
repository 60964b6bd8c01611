import pytest

from kegraph.analysis import GraphFacts
from kegraph.errors import DomainError, GraphParseError
from kegraph.gallery import computed_value, fixture_cells, gallery_cells, gallery_fixture, gallery_names, mismatches, paper_gallery, parse_gallery

SMALL = """
# two fixtures
[cherry]
vertices: mid=B1 B2 T1
B1 B2
B1 T1   # second leaf
expect n = 3
expect core = { p2 , p1 }
discrepancy alpha = 1
note hand-made

[lonely]
vertices: B1
expect m = 0
"""


def test_parse_small_bundle():
    cherry, lonely = parse_gallery(SMALL)
    assert cherry.name == "cherry"
    assert cherry.graph.n == 3 and cherry.graph.m == 2
    assert cherry.graph.label(0) == "mid"
    assert cherry.graph.vertex("p2") == 2
    assert cherry.expected == {"n": "3", "core": "{p1, p2}"}
    assert cherry.discrepancies == {"alpha": "1"}
    assert cherry.notes == ["hand-made"]
    assert lonely.graph.n == 1 and lonely.expected == {"m": "0"}


def test_small_bundle_cells():
    cells = fixture_cells(parse_gallery(SMALL)[0])
    by_key = {c.key: c for c in cells}
    assert by_key["core"].match
    assert by_key["alpha"].discrepancy and not by_key["alpha"].match
    assert by_key["alpha"].computed == "2"
    assert mismatches(cells) == []


@pytest.mark.parametrize("text, line", [
    ("B1 B2\n", 1),
    ("[x]\nvertices: B1 B2\nB1 B3\n", 3),
    ("[x]\nvertices: B1 B2\nexpect colour = red\n", 3),
    ("[x]\nvertices: B1 B2\nexpect alpha\n", 3),
    ("[x]\nvertices: B1 B1\n", 2),
    ("[x]\nvertices: B1\nvertices: B2\n", 3),
    ("[x]\nvertices: B1 B2\n\nB1 B2 B1\n", 4),
    ("[x]\nvertices: B1 B2\nexpect core = {a, b\n", 3),
])
def test_parse_errors_carry_line_numbers(text, line):
    with pytest.raises(GraphParseError) as info:
        parse_gallery(text)
    assert info.value.line == line


def test_self_loop_is_reported_at_the_header():
    with pytest.raises(GraphParseError) as info:
        parse_gallery("\n[x]\nvertices: B1 B2\nB1 B1\n")
    assert info.value.line == 2


def test_duplicate_fixture_names():
    with pytest.raises(GraphParseError):
        parse_gallery("[x]\nvertices: B1\n[x]\nvertices: B1\n")


def test_bundle_contents():
    fixtures = paper_gallery()
    assert len(fixtures) == 24
    assert len(set(gallery_names())) == 24
    assert all(f.expected for f in fixtures)


def test_bundle_matches_computation():
    assert mismatches(gallery_cells()) == []


def test_known_discrepancy_is_reported_not_fatal():
    cells = [c for c in gallery_cells() if c.fixture == "complete-4"]
    stated = [c for c in cells if c.discrepancy]
    assert len(stated) == 1
    assert stated[0].key == "rho_v"
    assert (stated[0].expected, stated[0].computed) == ("2", "0")
    assert not stated[0].match
    assert all(c.match for c in cells if not c.discrepancy)


def test_unknown_fixture():
    with pytest.raises(DomainError):
        gallery_fixture("dodecahedron")


def test_computed_values_on_paw():
    facts = GraphFacts(gallery_fixture("paw").graph)
    assert computed_value(facts, "core") == "{v1}"
    assert computed_value(facts, "ker") == "{}"
    assert computed_value(facts, "kind") == "ke_non_bipartite"
    assert computed_value(facts, "neighborhood:v1") == "{v3}"
    assert computed_value(facts, "delete_vertex:v1") == "not_ke"
    assert computed_value(facts, "delete_edge:v1-v3") == "not_ke"
    assert computed_value(facts, "critical:v1") == "true"
    assert computed_value(facts, "eligible:v2") == "true"
    assert computed_value(facts, "eligible:v3") == "false"
