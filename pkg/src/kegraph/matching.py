"""
Maximum matchings.

General graphs use Edmonds' blossom algorithm in its array form (base,
parent and used arrays, blossoms contracted by relabelling their base).
Exposed vertices are tried as roots in ascending order and adjacency is
scanned in ascending order, so every call returns the same matching.

Bipartite subproblems (the double cover, matchings between two vertex
sets) use Hopcroft-Karp.
"""

import random
from collections import deque
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from kegraph.config import ensure_budget
from kegraph.errors import DomainError, WorkBudget
from kegraph.graph import Edge, EdgeSet, Graph, VertexSet, normalize_edge, relabel
from kegraph.schemas import PairingKind

__all__ = [
    "Matching", "BipartiteGraph", "HopcroftKarp", "max_matching", "matching_number",
    "max_matching_bipartite", "mu_critical_vertices", "mu_critical_edges",
    "unique_perfect_matching_between", "PerfectMatchingVerdict",
    "enumerate_maximum_matchings", "sample_maximum_matchings", "maximum_matchings",
]


@dataclass(frozen=True)
class Matching:
    edges: EdgeSet

    @classmethod
    def from_pairs(cls, pairs: Iterable[Tuple[int, int]]) -> "Matching":
        edges = frozenset(normalize_edge(u, v) for u, v in pairs)
        covered = [v for e in edges for v in e]
        if len(covered) != len(set(covered)):
            raise DomainError("edges of a matching must be pairwise disjoint")
        return cls(edges)

    @classmethod
    def from_mate(cls, mate: Sequence[int]) -> "Matching":
        return cls(frozenset((v, u) for v, u in enumerate(mate) if u > v))

    @property
    def saturated(self) -> VertexSet:
        return frozenset(v for e in self.edges for v in e)

    def mate_map(self) -> Dict[int, int]:
        out = {}
        for u, v in self.edges:
            out[u] = v
            out[v] = u
        return out

    def saturates(self, v: int) -> bool:
        return any(v in e for e in self.edges)

    def sorted_edges(self) -> List[Edge]:
        return sorted(self.edges)

    def __len__(self) -> int:
        return len(self.edges)

    def __contains__(self, edge) -> bool:
        return normalize_edge(*edge) in self.edges


class _Blossom:
    """Edmonds' algorithm over an adjacency list, optionally seeded with a partial matching."""

    def __init__(self, adj: List[List[int]], mate: Optional[List[int]] = None):
        self.adj = adj
        self.n = len(adj)
        self.mate = list(mate) if mate is not None else [-1] * self.n
        self.parent = [-1] * self.n
        self.base = list(range(self.n))
        self.used = [False] * self.n

    def _lca(self, a: int, b: int) -> int:
        seen = [False] * self.n
        while True:
            a = self.base[a]
            seen[a] = True
            if self.mate[a] == -1:
                break
            a = self.parent[self.mate[a]]
        while True:
            b = self.base[b]
            if seen[b]:
                return b
            b = self.parent[self.mate[b]]

    def _mark_path(self, v: int, b: int, child: int, blossom: List[bool]):
        while self.base[v] != b:
            blossom[self.base[v]] = True
            blossom[self.base[self.mate[v]]] = True
            self.parent[v] = child
            child = self.mate[v]
            v = self.parent[self.mate[v]]

    def _find_path(self, root: int) -> int:
        n = self.n
        self.used = [False] * n
        self.parent = [-1] * n
        self.base = list(range(n))
        self.used[root] = True
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for to in self.adj[v]:
                if self.base[v] == self.base[to] or self.mate[v] == to:
                    continue
                if to == root or (self.mate[to] != -1 and self.parent[self.mate[to]] != -1):
                    cur = self._lca(v, to)
                    blossom = [False] * n
                    self._mark_path(v, cur, to, blossom)
                    self._mark_path(to, cur, v, blossom)
                    for i in range(n):
                        if blossom[self.base[i]]:
                            self.base[i] = cur
                            if not self.used[i]:
                                self.used[i] = True
                                queue.append(i)
                elif self.parent[to] == -1:
                    self.parent[to] = v
                    if self.mate[to] == -1:
                        return to
                    self.used[self.mate[to]] = True
                    queue.append(self.mate[to])
        return -1

    def _augment(self, end: int):
        while end != -1:
            pv = self.parent[end]
            ppv = self.mate[pv]
            self.mate[end] = pv
            self.mate[pv] = end
            end = ppv

    def __call__(self) -> List[int]:
        for root in range(self.n):
            if self.mate[root] == -1 and self.adj[root]:
                end = self._find_path(root)
                if end != -1:
                    self._augment(end)
        return self.mate


def _adjacency(g: Graph, skip_vertex: int = -1, skip_edge: Optional[Edge] = None) -> List[List[int]]:
    adj = []
    for v in range(g.n):
        if v == skip_vertex:
            adj.append([])
            continue
        row = [u for u in sorted(g.adj[v]) if u != skip_vertex]
        if skip_edge is not None and v in skip_edge:
            other = skip_edge[1] if v == skip_edge[0] else skip_edge[0]
            row = [u for u in row if u != other]
        adj.append(row)
    return adj


def _greedy_mate(adj: List[List[int]]) -> List[int]:
    mate = [-1] * len(adj)
    for v, row in enumerate(adj):
        if mate[v] != -1:
            continue
        for u in row:
            if mate[u] == -1:
                mate[v] = u
                mate[u] = v
                break
    return mate


def _max_mate(g: Graph) -> List[int]:
    adj = _adjacency(g)
    return _Blossom(adj, _greedy_mate(adj))()


def max_matching(g: Graph) -> Matching:
    """A maximum matching of g, the same one on every call."""
    return Matching.from_mate(_max_mate(g))


def matching_number(g: Graph) -> int:
    return len(max_matching(g))


class BipartiteGraph:
    """
    Bipartite graph G = ((U, V), E) with both sides indexed 0, 1, ...
    """

    def __init__(self, num_u: int, num_v: int, edges: Iterable[Tuple[int, int]]):
        self.num_u = num_u
        self.num_v = num_v
        self.adj_u: List[List[int]] = [[] for _ in range(num_u)]
        for u, v in edges:
            if not (0 <= u < num_u and 0 <= v < num_v):
                raise DomainError(f"bipartite edge ({u}, {v}) is out of range")
            if v not in self.adj_u[u]:
                self.adj_u[u].append(v)
        for row in self.adj_u:
            row.sort()


class HopcroftKarp:
    """Maximum-cardinality matching of a BipartiteGraph by shortest augmenting path phases."""

    def __init__(self, graph: BipartiteGraph):
        self.graph = graph
        self.pair_u = [-1] * graph.num_u
        self.pair_v = [-1] * graph.num_v
        self.dist: List[int] = []

    def _layer(self) -> bool:
        """BFS from the free vertices of U. True when some free vertex of V is reachable."""
        inf = self.graph.num_u + 1
        self.dist = [inf] * self.graph.num_u
        queue = deque()
        for u in range(self.graph.num_u):
            if self.pair_u[u] == -1:
                self.dist[u] = 0
                queue.append(u)
        found = False
        while queue:
            u = queue.popleft()
            for v in self.graph.adj_u[u]:
                w = self.pair_v[v]
                if w == -1:
                    found = True
                elif self.dist[w] == inf:
                    self.dist[w] = self.dist[u] + 1
                    queue.append(w)
        return found

    def _augment(self, root: int) -> bool:
        """Iterative DFS along the BFS layers; flips the path when it ends at a free vertex."""
        inf = self.graph.num_u + 1
        stack = [(root, iter(self.graph.adj_u[root]))]
        path: List[Tuple[int, int]] = []
        while stack:
            u, it = stack[-1]
            advanced = False
            for v in it:
                w = self.pair_v[v]
                if w == -1:
                    path.append((u, v))
                    for pu, pv in path:
                        self.pair_u[pu] = pv
                        self.pair_v[pv] = pu
                    return True
                if self.dist[w] == self.dist[u] + 1:
                    path.append((u, v))
                    stack.append((w, iter(self.graph.adj_u[w])))
                    advanced = True
                    break
            if not advanced:
                self.dist[u] = inf
                stack.pop()
                if path:
                    path.pop()
        return False

    def __call__(self) -> List[Tuple[int, int]]:
        self.pair_u = [-1] * self.graph.num_u
        self.pair_v = [-1] * self.graph.num_v
        while self._layer():
            for u in range(self.graph.num_u):
                if self.pair_u[u] == -1:
                    self._augment(u)
        return [(u, self.pair_u[u]) for u in range(self.graph.num_u) if self.pair_u[u] != -1]


def _check_disjoint(left: FrozenSet[int], right: FrozenSet[int]):
    if left & right:
        raise DomainError(f"parts overlap in {sorted(left & right)}")


def max_matching_bipartite(g: Graph, left: Iterable[int], right: Iterable[int]) -> Matching:
    """Maximum matching among the edges of g that join `left` to `right`."""
    a = sorted(frozenset(left))
    b = sorted(frozenset(right))
    g.check_vertices(a)
    g.check_vertices(b)
    _check_disjoint(frozenset(a), frozenset(b))
    index_b = {v: i for i, v in enumerate(b)}
    edges = [(i, index_b[w]) for i, u in enumerate(a) for w in g.adj[u] if w in index_b]
    pairs = HopcroftKarp(BipartiteGraph(len(a), len(b), edges))()
    return Matching.from_pairs((a[i], b[j]) for i, j in pairs)


def mu_critical_vertices(g: Graph) -> VertexSet:
    """Vertices saturated by every maximum matching, i.e. those whose deletion lowers the matching number."""
    mate = _max_mate(g)
    critical = set()
    for v in range(g.n):
        if mate[v] == -1:
            continue
        seeded = list(mate)
        seeded[seeded[v]] = -1
        seeded[v] = -1
        after = _Blossom(_adjacency(g, skip_vertex=v), seeded)()
        if sum(1 for x in after if x != -1) // 2 < sum(1 for x in mate if x != -1) // 2:
            critical.add(v)
    return frozenset(critical)


def mu_critical_edges(g: Graph) -> EdgeSet:
    """Edges contained in every maximum matching. Only edges of one maximum matching need testing."""
    mate = _max_mate(g)
    mu = sum(1 for x in mate if x != -1) // 2
    critical = set()
    for u, v in Matching.from_mate(mate).sorted_edges():
        seeded = list(mate)
        seeded[u] = -1
        seeded[v] = -1
        after = _Blossom(_adjacency(g, skip_edge=(u, v)), seeded)()
        if sum(1 for x in after if x != -1) // 2 < mu:
            critical.add((u, v))
    return frozenset(critical)


@dataclass(frozen=True)
class PerfectMatchingVerdict:
    kind: PairingKind
    first: Optional[Matching] = None
    second: Optional[Matching] = None


def _alternating_cycle(g: Graph, a: List[int], b_set: FrozenSet[int], mate: Dict[int, int]) -> Optional[List[Tuple[int, int]]]:
    """Directed cycle x -> mate(y) over non-matching edges xy, returned as its (x, y) arcs."""
    arcs: Dict[int, List[Tuple[int, int]]] = {}
    for x in a:
        arcs[x] = [(y, mate[y]) for y in sorted(g.adj[x]) if y in b_set and mate[x] != y]
    colour = {x: 0 for x in a}
    for start in a:
        if colour[start]:
            continue
        colour[start] = 1
        stack = [(start, iter(arcs[start]))]
        entered_by: List[Optional[Tuple[int, int]]] = [None]
        while stack:
            x, it = stack[-1]
            moved = False
            for y, nxt in it:
                if colour[nxt] == 1:
                    k = next(i for i, (z, _) in enumerate(stack) if z == nxt)
                    return [arc for arc in entered_by[k + 1:] if arc is not None] + [(x, y)]
                if colour[nxt] == 0:
                    colour[nxt] = 1
                    stack.append((nxt, iter(arcs[nxt])))
                    entered_by.append((x, y))
                    moved = True
                    break
            if not moved:
                colour[x] = 2
                stack.pop()
                entered_by.pop()
    return None


def unique_perfect_matching_between(g: Graph, a: Iterable[int], b: Iterable[int]) -> PerfectMatchingVerdict:
    """Classify the perfect matchings between A and B that use only (A, B) edges.

    A perfect matching is unique exactly when it admits no alternating cycle.
    A cycle is found as a directed cycle on A with an arc x -> mate(y) for
    every non-matching edge xy, and the second matching is the first one
    with that cycle flipped.
    """
    left = frozenset(a)
    right = frozenset(b)
    g.check_vertices(left | right)
    _check_disjoint(left, right)
    if len(left) != len(right):
        return PerfectMatchingVerdict(PairingKind.NONE)
    found = max_matching_bipartite(g, left, right)
    if len(found) != len(left):
        return PerfectMatchingVerdict(PairingKind.NON_PERFECT, first=found)
    mate = found.mate_map()
    cycle = _alternating_cycle(g, sorted(left), right, mate)
    if cycle is None:
        return PerfectMatchingVerdict(PairingKind.UNIQUE, first=found)
    flipped = {x: mate[x] for x in left}
    for x, y in cycle:
        flipped[x] = y
    second = Matching.from_pairs(flipped.items())
    return PerfectMatchingVerdict(PairingKind.MULTIPLE, first=found, second=second)


def enumerate_maximum_matchings(g: Graph, budget: Optional[WorkBudget] = None) -> List[Matching]:
    """Every maximum matching of g, each exactly once.

    The lowest undecided vertex is either left exposed (while the allowance
    of n - 2*mu exposed vertices lasts) or matched to an undecided neighbor.
    """
    budget = ensure_budget(budget)
    mu = matching_number(g)
    allowance = g.n - 2 * mu
    found: List[Matching] = []
    decided = [False] * g.n
    chosen: List[Edge] = []

    def walk(start: int, spare: int):
        budget.spend()
        v = start
        while v < g.n and decided[v]:
            v += 1
        if v == g.n:
            found.append(Matching(frozenset(chosen)))
            return
        decided[v] = True
        if spare > 0:
            walk(v + 1, spare - 1)
        for u in sorted(g.adj[v]):
            if decided[u]:
                continue
            decided[u] = True
            chosen.append(normalize_edge(v, u))
            walk(v + 1, spare)
            chosen.pop()
            decided[u] = False
        decided[v] = False

    walk(0, allowance)
    return found


def sample_maximum_matchings(g: Graph, count: int = 50, seed: int = 0) -> List[Matching]:
    """Maximum matchings found under `count` seeded random vertex orders, deduplicated, in discovery order."""
    rng = random.Random(seed)
    seen = set()
    out: List[Matching] = []
    order = list(range(g.n))
    for _ in range(count):
        rng.shuffle(order)
        shuffled = relabel(g, order)
        found = max_matching(shuffled)
        back = Matching(frozenset(normalize_edge(order[u], order[v]) for u, v in found.edges))
        if back.edges not in seen:
            seen.add(back.edges)
            out.append(back)
    return out


def maximum_matchings(g: Graph, exact_max_n: int = 12, samples: int = 50, seed: int = 0,
                      budget: Optional[WorkBudget] = None) -> Tuple[List[Matching], bool]:
    """All maximum matchings when n <= exact_max_n, otherwise a seeded sample. The flag is True for the exact list."""
    if g.n <= exact_max_n:
        return enumerate_maximum_matchings(g, budget), True
    return sample_maximum_matchings(g, samples, seed), False
