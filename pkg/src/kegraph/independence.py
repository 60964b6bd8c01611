"""
Exact independence computations.

Everything here runs on bitmasks. The maximum independent set search is a
branch and bound that:
  - takes vertices of degree 0 or 1 without branching (some maximum set
    always contains them),
  - bounds each node by a greedy clique cover of the remaining candidates,
  - branches on a vertex of maximum remaining degree.

All searches spend from a WorkBudget and raise BudgetExceeded instead of
returning an approximate answer.
"""

from typing import Iterator, List, Optional, Sequence, Tuple

from kegraph.config import ensure_budget
from kegraph.errors import WorkBudget
from kegraph.graph import EdgeSet, Graph, VertexSet, bits, set_of
from kegraph.schemas import IndependenceSummary


def _clique_cover_bound(masks: Sequence[int], cand: int) -> int:
    """Number of cliques in a greedy cover of `cand`, an upper bound on its independence number."""
    count = 0
    rest = cand
    while rest:
        low = rest & -rest
        v = low.bit_length() - 1
        clique = low
        common = masks[v] & rest
        rest ^= low
        while common:
            w_bit = common & -common
            w = w_bit.bit_length() - 1
            clique |= w_bit
            rest ^= w_bit
            common &= masks[w]
            common &= ~w_bit
        count += 1
    return count


class _MaxIndependentSearch:
    def __init__(self, masks: Sequence[int], budget: WorkBudget):
        self.masks = masks
        self.budget = budget
        self.best_size = -1
        self.best_set = 0

    def run(self, cand: int) -> Tuple[int, int]:
        self._search(cand, 0, 0)
        return self.best_size, self.best_set

    def _search(self, cand: int, size: int, chosen: int):
        self.budget.spend()
        masks = self.masks
        reduced = True
        while reduced and cand:
            reduced = False
            for v in bits(cand):
                nbrs = masks[v] & cand
                if nbrs & (nbrs - 1) == 0:
                    chosen |= 1 << v
                    size += 1
                    cand &= ~((1 << v) | nbrs)
                    reduced = True
                    break
        if not cand:
            if size > self.best_size:
                self.best_size = size
                self.best_set = chosen
            return
        if size + _clique_cover_bound(masks, cand) <= self.best_size:
            return
        pivot = max(bits(cand), key=lambda v: ((masks[v] & cand).bit_count(), -v))
        self._search(cand & ~((1 << pivot) | masks[pivot]), size + 1, chosen | (1 << pivot))
        self._search(cand & ~(1 << pivot), size, chosen)


def _alpha_within(g: Graph, cand: int, budget: WorkBudget) -> int:
    size, _ = _MaxIndependentSearch(g.masks, budget).run(cand)
    return size


def independence_number(g: Graph, budget: Optional[WorkBudget] = None) -> int:
    return _alpha_within(g, g.all_mask, ensure_budget(budget))


def maximum_independent_set(g: Graph, budget: Optional[WorkBudget] = None) -> VertexSet:
    _, found = _MaxIndependentSearch(g.masks, ensure_budget(budget)).run(g.all_mask)
    return set_of(found)


def enumerate_maximum_independent_sets(g: Graph, budget: Optional[WorkBudget] = None) -> List[VertexSet]:
    """Every maximum independent set, each once, sorted by member tuple."""
    budget = ensure_budget(budget)
    alpha = _alpha_within(g, g.all_mask, budget)
    masks = g.masks
    found: List[VertexSet] = []

    def walk(cand: int, size: int, chosen: int):
        budget.spend()
        if not cand:
            if size == alpha:
                found.append(set_of(chosen))
            return
        if size + _clique_cover_bound(masks, cand) < alpha:
            return
        low = cand & -cand
        v = low.bit_length() - 1
        walk(cand & ~(low | masks[v]), size + 1, chosen | low)
        walk(cand & ~low, size, chosen)

    walk(g.all_mask, 0, 0)
    return sorted(found, key=lambda s: sorted(s))


def core(g: Graph, budget: Optional[WorkBudget] = None) -> VertexSet:
    """Intersection of all maximum independent sets, computed as the alpha-critical vertices."""
    budget = ensure_budget(budget)
    search = _MaxIndependentSearch(g.masks, budget)
    alpha, witness = search.run(g.all_mask)
    members = []
    # a vertex missing from one maximum set cannot be in the core
    for v in bits(witness):
        if _alpha_within(g, g.all_mask & ~(1 << v), budget) < alpha:
            members.append(v)
    return frozenset(members)


def alpha_critical_vertices(g: Graph, budget: Optional[WorkBudget] = None) -> VertexSet:
    return core(g, budget)


def alpha_critical_edges(g: Graph, budget: Optional[WorkBudget] = None) -> EdgeSet:
    """Edges uv whose deletion raises alpha: 2 + alpha(G - N[u] - N[v]) > alpha(G)."""
    budget = ensure_budget(budget)
    alpha = _alpha_within(g, g.all_mask, budget)
    masks = g.masks
    found = []
    for u, v in g.edges():
        outside = g.all_mask & ~(masks[u] | masks[v] | (1 << u) | (1 << v))
        if 2 + _alpha_within(g, outside, budget) > alpha:
            found.append((u, v))
    return frozenset(found)


def enumerate_independent_sets(g: Graph, budget: Optional[WorkBudget] = None) -> Iterator[VertexSet]:
    """Every independent set exactly once, the empty set first."""
    budget = ensure_budget(budget)
    masks = g.masks

    def walk(start: int, chosen: int, blocked: int) -> Iterator[VertexSet]:
        budget.spend()
        yield set_of(chosen)
        for v in range(start, g.n):
            if not (blocked >> v) & 1:
                yield from walk(v + 1, chosen | (1 << v), blocked | masks[v] | (1 << v))

    yield from walk(0, 0, 0)


def summarize_independence(g: Graph, budget: Optional[WorkBudget] = None, enumerate_omega: bool = False) -> IndependenceSummary:
    budget = ensure_budget(budget)
    alpha = independence_number(g, budget)
    members = sorted(core(g, budget))
    omega = len(enumerate_maximum_independent_sets(g, budget)) if enumerate_omega else None
    return IndependenceSummary(
        alpha=alpha,
        omega_count=omega,
        core=members,
        xi=len(members),
        eta=len(alpha_critical_edges(g, budget)),
        alpha_critical_vertices=members,
    )
