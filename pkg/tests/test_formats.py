import networkx as nx
import pytest

from kegraph.errors import GraphParseError
from kegraph.formats import (
    encode_dimacs,
    encode_edge_list,
    encode_graph6,
    parse_edge_list,
    parse_graph6,
    read_edge_list,
    read_graphs,
    sniff_format,
)
from kegraph.generators import complete, cycle, path, petersen
from kegraph.graph import Graph

from oracles import to_nx


@pytest.mark.parametrize("g, expected", [
    (Graph.empty(0), "?"),
    (Graph.empty(1), "@"),
    (cycle(5), "Dhc"),
    (complete(4), "C~"),
])
def test_known_graph6_strings(g, expected):
    assert encode_graph6(g) == expected
    assert parse_graph6(expected) == g


def test_graph6_matches_networkx_on_the_atlas(small_atlas):
    for g in small_atlas:
        expected = nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()
        assert encode_graph6(g) == expected


def test_graph6_long_form():
    g = path(70)
    text = encode_graph6(g)
    assert text.startswith("~")
    assert text == nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()
    assert parse_graph6(text) == g


def test_graph6_header_is_accepted():
    assert parse_graph6(">>graph6<<Dhc\n") == cycle(5)


def test_parse_graph6_against_networkx():
    g = petersen()
    text = encode_graph6(g)
    back = nx.from_graph6_bytes(text.encode())
    assert sorted(tuple(sorted(e)) for e in back.edges()) == g.edges()


@pytest.mark.parametrize("text, offset", [
    ("", 0),
    ("D", 1),       # five vertices need two adjacency bytes
    ("Aa", 1),      # only one bit used, the rest must be zero
    ("Dh\x7f", 2),  # outside 63..126
    ("Dhc?", 3),    # one byte too many
])
def test_graph6_errors_carry_offsets(text, offset):
    with pytest.raises(GraphParseError) as info:
        parse_graph6(text)
    assert info.value.offset == offset


def test_plain_edge_list():
    g = parse_edge_list("3 2\n0 1\n# comment\n1 2\n")
    assert g == path(3)
    assert encode_edge_list(g) == "3 2\n0 1\n1 2\n"


def test_edge_list_warnings():
    result = read_edge_list("3 5\n0 1\n1 0\n1 2\n")
    assert result.graph.m == 2
    assert result.duplicates == 1
    assert any("duplicate" in w for w in result.warnings)
    assert any("declares 5" in w for w in result.warnings)


@pytest.mark.parametrize("text, line", [
    ("3 1\n1 1\n", 2),
    ("3 1\n0 9\n", 2),
    ("3 1\n0 x\n", 2),
    ("3\n", 1),
])
def test_edge_list_errors_carry_lines(text, line):
    with pytest.raises(GraphParseError) as info:
        parse_edge_list(text)
    assert info.value.line == line


def test_dimacs():
    text = "c a path\np edge 3 2\ne 1 2\ne 2 3\n"
    assert parse_edge_list(text) == path(3)
    assert encode_dimacs(path(3)) == "p edge 3 2\ne 1 2\ne 2 3\n"


def test_dimacs_edge_before_problem_line():
    with pytest.raises(GraphParseError) as info:
        parse_edge_list("c x\ne 1 2\n")
    assert info.value.line == 2


@pytest.mark.parametrize("line, fmt", [
    ("Dhc", "graph6"),
    ("p edge 3 2", "dimacs"),
    ("c comment", "dimacs"),
    ("3 2", "edgelist"),
])
def test_sniff_format(line, fmt):
    assert sniff_format(line) == fmt


def test_read_graphs_streams_graph6_with_errors():
    parsed = list(read_graphs(["Dhc\n", "\n", "D\n", "C~\n"]))
    assert [p.index for p in parsed] == [0, 1, 2]
    assert [p.line for p in parsed] == [1, 3, 4]
    assert parsed[0].graph == cycle(5)
    assert parsed[1].graph is None and parsed[1].error.line == 3
    assert parsed[2].graph == complete(4)


def test_read_graphs_single_edge_list():
    parsed = list(read_graphs(["p edge 2 1\n", "e 1 2\n"]))
    assert len(parsed) == 1
    assert parsed[0].graph.m == 1


def test_read_graphs_empty_input():
    assert list(read_graphs([])) == []
    assert list(read_graphs(["\n", "  \n"])) == []


@pytest.mark.parametrize("text, m", [
    ("# path on three vertices\n3 2\n0 1\n1 2\n", 2),
    ("# triangle\np edge 3 3\ne 1 2\ne 2 3\ne 1 3\n", 3),
])
def test_read_graphs_skips_leading_comments(text, m):
    (parsed,) = read_graphs(text.splitlines(keepends=True))
    assert parsed.error is None
    assert (parsed.graph.n, parsed.graph.m) == (3, m)


def test_read_graphs_skips_comments_between_graph6_lines():
    parsed = list(read_graphs(["# census\n", "Dhc\n", "# next\n", "C~\n"]))
    assert [p.graph for p in parsed] == [cycle(5), complete(4)]
    assert [p.line for p in parsed] == [2, 4]
