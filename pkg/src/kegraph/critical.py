"""
Critical differences and critical independent sets.

d(X) = |X| - |N(X)|, and d(G) is its maximum over all vertex sets, attained
by an independent set. d(G) is computed as the deficiency of the bipartite
double cover: with parts V and V', and u - v' for every edge uv, the
neighborhood of A inside V' is N(A), so d(G) = n - mu(double cover).
"""

from typing import Iterable, List, Optional, Tuple

from kegraph.config import ensure_budget
from kegraph.errors import DomainError, WorkBudget
from kegraph.graph import Graph, VertexSet, closed_neighborhood, delete_vertex, delete_vertices, is_independent, neighborhood
from kegraph.independence import enumerate_independent_sets
from kegraph.matching import BipartiteGraph, HopcroftKarp
from kegraph.schemas import CriticalProfile


def difference(g: Graph, a: Iterable[int]) -> int:
    members = frozenset(a)
    return len(members) - len(neighborhood(g, members))


def bipartite_double_cover(g: Graph) -> BipartiteGraph:
    return BipartiteGraph(g.n, g.n, ((u, v) for u in range(g.n) for v in g.adj[u]))


def critical_difference(g: Graph) -> int:
    return g.n - len(HopcroftKarp(bipartite_double_cover(g))())


def critical_difference_bruteforce(g: Graph, budget: Optional[WorkBudget] = None) -> Tuple[int, VertexSet]:
    """Maximum of d(I) over independent sets I, with the lexicographically least set attaining it."""
    best = -1
    witness: Tuple[int, ...] = ()
    for s in enumerate_independent_sets(g, budget):
        value = difference(g, s)
        key = tuple(sorted(s))
        if value > best or (value == best and key < witness):
            best = value
            witness = key
    return best, frozenset(witness)


def is_critical(g: Graph, a: Iterable[int], d: Optional[int] = None) -> bool:
    members = frozenset(a)
    target = critical_difference(g) if d is None else d
    return difference(g, members) == target


def is_critical_independent(g: Graph, a: Iterable[int], d: Optional[int] = None) -> bool:
    members = frozenset(a)
    return is_independent(g, members) and is_critical(g, members, d)


def ker(g: Graph) -> VertexSet:
    """Vertices whose deletion lowers the critical difference by one."""
    d = critical_difference(g)
    return frozenset(v for v in range(g.n) if critical_difference(delete_vertex(g, v)) == d - 1)


def _extension_value(g: Graph, t: VertexSet) -> int:
    """Largest d(I) over independent sets I containing the independent set T."""
    rest = delete_vertices(g, closed_neighborhood(g, t)).graph
    return difference(g, t) + critical_difference(rest)


def in_some_critical_independent_set(g: Graph, v: int) -> bool:
    """Whether v belongs to a critical independent set: 1 - deg(v) + d(G - N[v]) == d(G)."""
    g.check_vertices([v])
    return _extension_value(g, frozenset([v])) == critical_difference(g)


def find_critical_independent_set(g: Graph) -> VertexSet:
    """Grow ker(G) greedily in ascending vertex order, keeping the set extendable to a critical one.

    A vertex v outside N[J] joins J when J + v still extends to an
    independent set of difference d(G). Since the set stays extendable at
    every step and ends maximal, it is critical.
    """
    d = critical_difference(g)
    chosen = ker(g)
    for v in range(g.n):
        if v in closed_neighborhood(g, chosen):
            continue
        trial = chosen | {v}
        if _extension_value(g, trial) == d:
            chosen = trial
    return frozenset(chosen)


def critical_independent_sets(g: Graph, budget: Optional[WorkBudget] = None) -> List[VertexSet]:
    """All critical independent sets, by enumeration."""
    budget = ensure_budget(budget)
    d = critical_difference(g)
    return [s for s in enumerate_independent_sets(g, budget) if difference(g, s) == d]


def max_critical_independent_set_bruteforce(g: Graph, budget: Optional[WorkBudget] = None) -> VertexSet:
    """A maximum critical independent set; the lexicographically least one on ties."""
    found = critical_independent_sets(g, budget)
    return min(found, key=lambda s: (-len(s), sorted(s)))


def maximum_critical_independent_sets(g: Graph, budget: Optional[WorkBudget] = None) -> List[VertexSet]:
    found = critical_independent_sets(g, budget)
    size = max(len(s) for s in found)
    return sorted((s for s in found if len(s) == size), key=sorted)


def has_only_empty_critical(g: Graph) -> bool:
    """True when the empty set is the only critical independent set, i.e. |N(A)| > |A| for every nonempty independent A."""
    if critical_difference(g) != 0:
        return False
    return not any(in_some_critical_independent_set(g, v) for v in range(g.n))


def critical_profile(g: Graph, budget: Optional[WorkBudget] = None, with_max: bool = False) -> CriticalProfile:
    d = critical_difference(g)
    kernel = sorted(ker(g))
    witness = sorted(find_critical_independent_set(g))
    max_size = len(max_critical_independent_set_bruteforce(g, budget)) if with_max else None
    return CriticalProfile(d=d, ker=kernel, epsilon=len(kernel), witness=witness, max_crit_size=max_size)


def require_critical_independent(g: Graph, a: Iterable[int]) -> VertexSet:
    members = frozenset(a)
    g.check_vertices(members)
    if not is_independent(g, members):
        raise DomainError(f"{sorted(members)} is not independent")
    if not is_critical(g, members):
        raise DomainError(f"{sorted(members)} is not critical")
    return members
