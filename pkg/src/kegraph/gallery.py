"""
The bundled gallery: small hand-transcribed graphs with the values stated for them.

The bundle lives in kegraph/data/gallery.txt. Every fixture is rebuilt
from its edge list and every stated value is recomputed, giving one
GalleryCell per (fixture, key). Cells read from "discrepancy" lines record
stated values known to be wrong; they are reported but never counted as
mismatches.
"""

from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from typing import Callable, Dict, List, Optional, Tuple

from kegraph.analysis import GraphFacts, ke_class
from kegraph.config import SearchLimits
from kegraph.critical import in_some_critical_independent_set, is_critical_independent, max_critical_independent_set_bruteforce
from kegraph.errors import DomainError, GraphParseError, WorkBudget
from kegraph.graph import Graph, delete_edge, delete_vertex, neighborhood
from kegraph.schemas import GalleryCell


@dataclass
class GalleryFixture:
    name: str
    graph: Graph
    expected: Dict[str, str] = field(default_factory=dict)
    discrepancies: Dict[str, str] = field(default_factory=dict)
    notes: List[str] = field(default_factory=list)


def _label_set(text: str) -> List[str]:
    inner = text.strip()
    if not (inner.startswith("{") and inner.endswith("}")):
        raise ValueError(f"expected a set like {{a, b}}, found {text!r}")
    return [part.strip() for part in inner[1:-1].split(",") if part.strip()]


def _render_set(labels) -> str:
    return "{" + ", ".join(sorted(labels)) + "}"


def _canonical(value: str) -> str:
    value = value.strip()
    if value.startswith("{"):
        return _render_set(_label_set(value))
    return value.lower()


def _deletion(cls) -> str:
    return "ke" if cls.is_ke else "not_ke"


def _vertices(g: Graph, arg: str) -> List[int]:
    return [g.vertex(label) for label in arg.split(",") if label]


def _edge(g: Graph, arg: str) -> Tuple[int, int]:
    left, _, right = arg.partition("-")
    return g.vertex(left), g.vertex(right)


def _labels(g: Graph, vertices) -> str:
    return _render_set(g.label(v) for v in vertices)


_VALUES: Dict[str, Callable[[GraphFacts], object]] = {
    "n": lambda f: f.g.n,
    "m": lambda f: f.g.m,
    "alpha": lambda f: f.alpha,
    "mu": lambda f: f.mu,
    "d": lambda f: f.d,
    "xi": lambda f: f.xi,
    "epsilon": lambda f: f.epsilon,
    "eta": lambda f: f.eta,
    "rho_v": lambda f: f.rho_v,
    "rho_e": lambda f: f.rho_e,
    "rho_v_formula": lambda f: f.g.n - f.xi + f.epsilon,
    "rho_e_bound": lambda f: f.g.m - f.xi + f.epsilon,
    "kind": lambda f: f.ke_class.kind.value,
    "is_ke": lambda f: str(f.is_ke).lower(),
    "cross_pocket": lambda f: f.cross_pocket.kind.value,
    "max_crit_size": lambda f: len(max_critical_independent_set_bruteforce(f.g, f.budget)),
    "core": lambda f: _labels(f.g, f.core),
    "ker": lambda f: _labels(f.g, f.ker),
}

_QUERIES: Dict[str, Callable[[GraphFacts, str], object]] = {
    "delete_vertex": lambda f, a: _deletion(ke_class(delete_vertex(f.g, f.g.vertex(a)), f.budget)),
    "delete_edge": lambda f, a: _deletion(ke_class(delete_edge(f.g, _edge(f.g, a)), f.budget)),
    "critical": lambda f, a: str(is_critical_independent(f.g, _vertices(f.g, a), f.d)).lower(),
    "neighborhood": lambda f, a: _labels(f.g, neighborhood(f.g, _vertices(f.g, a))),
    "eligible": lambda f, a: str(in_some_critical_independent_set(f.g, f.g.vertex(a))).lower(),
}


def _known_key(key: str) -> bool:
    head, sep, arg = key.partition(":")
    if sep:
        return head in _QUERIES and bool(arg)
    return head in _VALUES


def computed_value(facts: GraphFacts, key: str) -> str:
    head, sep, arg = key.partition(":")
    if sep:
        return _canonical(str(_QUERIES[head](facts, arg)))
    return _canonical(str(_VALUES[head](facts)))


class _FixtureBuilder:
    def __init__(self, name: str, line: int):
        self.name = name
        self.line = line
        self.positions: Dict[str, int] = {}
        self.labels: List[str] = []
        self.edges: List[Tuple[int, int]] = []
        self.expected: Dict[str, str] = {}
        self.discrepancies: Dict[str, str] = {}
        self.notes: List[str] = []

    def declare(self, tokens: List[str], line: int):
        if self.labels:
            raise GraphParseError("second vertices line", line=line)
        unnamed = 0
        for token in tokens:
            label, sep, position = token.partition("=")
            if not sep:
                unnamed += 1
                label, position = f"p{unnamed}", token
            if position in self.positions or label in self.labels:
                raise GraphParseError(f"repeated vertex {token!r}", line=line)
            self.positions[position] = len(self.labels)
            self.labels.append(label)

    def position(self, token: str, line: int) -> int:
        if token not in self.positions:
            raise GraphParseError(f"unknown position {token!r}", line=line)
        return self.positions[token]

    def build(self) -> GalleryFixture:
        try:
            g = Graph.from_edges(len(self.labels), self.edges, self.labels)
        except DomainError as exc:
            raise GraphParseError(f"fixture {self.name}: {exc}", line=self.line) from None
        return GalleryFixture(self.name, g, self.expected, self.discrepancies, self.notes)


def _annotation(rest: str, line: int) -> Tuple[str, str]:
    key, sep, value = rest.partition(" = ")
    key = key.strip()
    if not sep or not value.strip():
        raise GraphParseError("expected '<key> = <value>'", line=line)
    if not _known_key(key):
        raise GraphParseError(f"unknown key {key!r}", line=line)
    try:
        return key, _canonical(value)
    except ValueError as exc:
        raise GraphParseError(str(exc), line=line) from None


def parse_gallery(text: str) -> List[GalleryFixture]:
    """Parse a gallery bundle. Errors carry the 1-based line number."""
    fixtures: List[GalleryFixture] = []
    current: Optional[_FixtureBuilder] = None
    for line_no, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0].strip()
        if not content:
            continue
        if content.startswith("[") and content.endswith("]"):
            if current is not None:
                fixtures.append(current.build())
            current = _FixtureBuilder(content[1:-1].strip(), line_no)
            continue
        if current is None:
            raise GraphParseError("content before the first [fixture] header", line=line_no)
        word, _, rest = content.partition(" ")
        if word == "vertices:":
            current.declare(rest.split(), line_no)
        elif word == "expect":
            key, value = _annotation(rest, line_no)
            current.expected[key] = value
        elif word == "discrepancy":
            key, value = _annotation(rest, line_no)
            current.discrepancies[key] = value
        elif word == "note":
            current.notes.append(rest.strip())
        else:
            tokens = content.split()
            if len(tokens) != 2:
                raise GraphParseError("expected an edge '<position> <position>'", line=line_no)
            current.edges.append((current.position(tokens[0], line_no), current.position(tokens[1], line_no)))
    if current is not None:
        fixtures.append(current.build())
    names = [f.name for f in fixtures]
    if len(set(names)) != len(names):
        raise GraphParseError("duplicate fixture names in the gallery")
    return fixtures


@lru_cache(maxsize=1)
def _bundle() -> Tuple[GalleryFixture, ...]:
    text = resources.files("kegraph").joinpath("data/gallery.txt").read_text(encoding="utf-8")
    return tuple(parse_gallery(text))


def paper_gallery() -> List[GalleryFixture]:
    return list(_bundle())


def gallery_names() -> List[str]:
    return [f.name for f in _bundle()]


def gallery_fixture(name: str) -> GalleryFixture:
    for fixture in _bundle():
        if fixture.name == name:
            return fixture
    raise DomainError(f"unknown gallery graph {name!r}; choose from {', '.join(gallery_names())}")


def fixture_cells(fixture: GalleryFixture, budget: Optional[WorkBudget] = None,
                  limits: Optional[SearchLimits] = None) -> List[GalleryCell]:
    facts = GraphFacts(fixture.graph, budget, limits)
    cells = []
    for key, expected in fixture.expected.items():
        computed = computed_value(facts, key)
        cells.append(GalleryCell(fixture=fixture.name, key=key, expected=expected, computed=computed,
                                 match=computed == expected))
    for key, stated in fixture.discrepancies.items():
        computed = computed_value(facts, key)
        cells.append(GalleryCell(fixture=fixture.name, key=key, expected=stated, computed=computed,
                                 match=computed == stated, discrepancy=True))
    return cells


def gallery_cells(budget: Optional[WorkBudget] = None, limits: Optional[SearchLimits] = None) -> List[GalleryCell]:
    """Every expected and discrepancy cell of the bundle, fixtures in bundle order.

    One budget per fixture when `budget` is None; a shared budget otherwise.
    """
    cells: List[GalleryCell] = []
    for fixture in _bundle():
        cells.extend(fixture_cells(fixture, budget, limits))
    return cells


def mismatches(cells: List[GalleryCell]) -> List[GalleryCell]:
    return [c for c in cells if not c.match and not c.discrepancy]
