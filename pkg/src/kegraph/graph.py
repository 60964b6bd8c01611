"""
Immutable simple undirected graphs.

Vertices are the integers 0..n-1. Drawn names (for instance the letters used
on a figure) travel along as optional labels and never affect identity: two
graphs are equal when they have the same order and the same adjacency.

Vertex sets are plain frozensets of ids. The search routines elsewhere in the
package work on integer bitmasks, which every Graph exposes through `masks`.
"""

from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Tuple

from kegraph.errors import DomainError

VertexSet = FrozenSet[int]
Edge = Tuple[int, int]
EdgeSet = FrozenSet[Edge]


def normalize_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


def bits(mask: int) -> Iterator[int]:
    """Yield the positions of the set bits of `mask`, lowest first."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def set_of(mask: int) -> VertexSet:
    return frozenset(bits(mask))


@dataclass(frozen=True)
class Graph:
    n: int
    adj: Tuple[FrozenSet[int], ...]
    labels: Optional[Tuple[str, ...]] = field(default=None, compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise DomainError(f"vertex count must be non-negative, got {self.n}")
        if len(self.adj) != self.n:
            raise DomainError(f"adjacency has {len(self.adj)} rows for {self.n} vertices")
        for v, nbrs in enumerate(self.adj):
            for u in nbrs:
                if not 0 <= u < self.n:
                    raise DomainError(f"neighbor {u} of vertex {v} is out of range")
                if u == v:
                    raise DomainError(f"loop at vertex {v}")
                if v not in self.adj[u]:
                    raise DomainError(f"adjacency is not symmetric at edge {v}-{u}")
        if self.labels is not None and len(self.labels) != self.n:
            raise DomainError(f"{len(self.labels)} labels for {self.n} vertices")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]], labels: Optional[Iterable[str]] = None) -> "Graph":
        rows: List[set] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise DomainError(f"edge {u}-{v} has an endpoint outside 0..{n - 1}")
            if u == v:
                raise DomainError(f"loop at vertex {u}")
            rows[u].add(v)
            rows[v].add(u)
        return cls(n, tuple(frozenset(r) for r in rows), tuple(labels) if labels is not None else None)

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls.from_edges(n, [])

    @cached_property
    def masks(self) -> Tuple[int, ...]:
        return tuple(mask_of(nbrs) for nbrs in self.adj)

    @cached_property
    def all_mask(self) -> int:
        return (1 << self.n) - 1

    @cached_property
    def m(self) -> int:
        return sum(len(nbrs) for nbrs in self.adj) // 2

    def vertices(self) -> range:
        return range(self.n)

    def edges(self) -> List[Edge]:
        """All edges as (u, v) with u < v, sorted."""
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and v in self.adj[u]

    def neighbors(self, v: int) -> List[int]:
        self._check_vertex(v)
        return sorted(self.adj[v])

    def label(self, v: int) -> str:
        if self.labels is not None:
            return self.labels[v]
        return str(v)

    def vertex(self, label: str) -> int:
        """Look a vertex up by its label."""
        if self.labels is not None and label in self.labels:
            return self.labels.index(label)
        raise DomainError(f"no vertex labelled {label!r}")

    def with_labels(self, labels: Optional[Iterable[str]]) -> "Graph":
        return Graph(self.n, self.adj, tuple(labels) if labels is not None else None)

    def isolated_vertices(self) -> VertexSet:
        return frozenset(v for v in range(self.n) if not self.adj[v])

    def _check_vertex(self, v: int):
        if not 0 <= v < self.n:
            raise DomainError(f"vertex {v} is not in a graph of order {self.n}")

    def check_vertices(self, vertices: Iterable[int]):
        for v in vertices:
            self._check_vertex(v)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class Subgraph:
    """An induced subgraph together with the parent id of each of its vertices."""
    graph: Graph
    parent: Tuple[int, ...]

    def to_parent(self, vertices: Iterable[int]) -> VertexSet:
        return frozenset(self.parent[v] for v in vertices)

    def from_parent(self) -> Dict[int, int]:
        return {p: i for i, p in enumerate(self.parent)}


def neighborhood(g: Graph, a: Iterable[int]) -> VertexSet:
    """N(A): every vertex with at least one neighbor in A."""
    members = frozenset(a)
    g.check_vertices(members)
    out = set()
    for v in members:
        out |= g.adj[v]
    return frozenset(out)


def closed_neighborhood(g: Graph, a: Iterable[int]) -> VertexSet:
    members = frozenset(a)
    return members | neighborhood(g, members)


def is_independent(g: Graph, a: Iterable[int]) -> bool:
    members = frozenset(a)
    g.check_vertices(members)
    return all(not (g.adj[v] & members) for v in members)


def induced_subgraph(g: Graph, a: Iterable[int]) -> Subgraph:
    keep = sorted(frozenset(a))
    g.check_vertices(keep)
    index = {v: i for i, v in enumerate(keep)}
    rows = tuple(frozenset(index[u] for u in g.adj[v] if u in index) for v in keep)
    labels = tuple(g.labels[v] for v in keep) if g.labels is not None else None
    return Subgraph(Graph(len(keep), rows, labels), tuple(keep))


def delete_vertices(g: Graph, removed: Iterable[int]) -> Subgraph:
    gone = frozenset(removed)
    g.check_vertices(gone)
    return induced_subgraph(g, (v for v in range(g.n) if v not in gone))


def delete_vertex(g: Graph, v: int) -> Graph:
    """G - v, renumbered to 0..n-2 with labels carried over."""
    return delete_vertices(g, [v]).graph


def delete_edge(g: Graph, e: Tuple[int, int]) -> Graph:
    u, v = e
    if not g.has_edge(u, v):
        raise DomainError(f"{u}-{v} is not an edge")
    rows = list(g.adj)
    rows[u] = rows[u] - {v}
    rows[v] = rows[v] - {u}
    return Graph(g.n, tuple(rows), g.labels)


def edges_between(g: Graph, a: Iterable[int], b: Iterable[int]) -> List[Edge]:
    """Edges with one end in A and the other in B, normalized and sorted."""
    left = frozenset(a)
    right = frozenset(b)
    found = set()
    for u in left:
        for v in g.adj[u]:
            if v in right:
                found.add(normalize_edge(u, v))
    return sorted(found)


def relabel(g: Graph, order: List[int]) -> Graph:
    """Graph whose vertex i is vertex order[i] of g."""
    position = {v: i for i, v in enumerate(order)}
    edges = [(position[u], position[v]) for u, v in g.edges()]
    labels = [g.label(v) for v in order] if g.labels is not None else None
    return Graph.from_edges(g.n, edges, labels)
