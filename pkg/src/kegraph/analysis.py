"""
König-Egerváry recognition, the heredity numbers and deletion classification.

A graph is König-Egerváry (KE) when alpha + mu = n and 1-KE when
alpha + mu = n - 1. rho_v and rho_e count the vertices and edges whose
deletion leaves a KE graph; both are computed by deleting and re-testing.

GraphFacts memoizes every invariant of one graph behind a single work
budget, so the report builder and the theorem suite share the searches.
"""

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, List, Optional, Tuple

from kegraph.config import SearchLimits, ensure_budget, get_search_limits
from kegraph.critical import (
    critical_difference,
    critical_independent_sets,
    find_critical_independent_set,
    ker,
    require_critical_independent,
)
from kegraph.errors import DomainError, WorkBudget
from kegraph.formats import encode_graph6
from kegraph.graph import (
    Edge,
    Graph,
    Subgraph,
    VertexSet,
    closed_neighborhood,
    delete_edge,
    delete_vertex,
    delete_vertices,
    induced_subgraph,
    neighborhood,
)
from kegraph.independence import (
    alpha_critical_edges,
    core,
    enumerate_maximum_independent_sets,
    independence_number,
    maximum_independent_set,
)
from kegraph.matching import (
    Matching,
    PerfectMatchingVerdict,
    max_matching,
    maximum_matchings,
    mu_critical_edges,
    mu_critical_vertices,
    unique_perfect_matching_between,
)
from kegraph.schemas import (
    EdgeLocation,
    EdgeVerdict,
    FormulaChecks,
    KEClass,
    KEKind,
    KEReport,
    PairingKind,
    VertexVerdict,
    VertexZone,
)

OPEN_PROBLEM_PREDICATES = (
    "rho_e_bound_holds",
    "rho_v_formula_holds",
    "rho_v_alpha_mu_formula_holds",
)


def bipartition(g: Graph) -> Optional[List[int]]:
    """A proper 2-colouring as a list of 0/1, or None when g has an odd cycle."""
    colour = [-1] * g.n
    for start in range(g.n):
        if colour[start] != -1:
            continue
        colour[start] = 0
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for u in g.adj[v]:
                if colour[u] == -1:
                    colour[u] = 1 - colour[v]
                    queue.append(u)
                elif colour[u] == colour[v]:
                    return None
    return colour


def is_bipartite(g: Graph) -> bool:
    return bipartition(g) is not None


def shortest_odd_cycle(g: Graph) -> Optional[List[int]]:
    """A shortest odd cycle as a vertex sequence, or None for bipartite graphs.

    A shortest odd cycle has no chord, so it is also an induced subgraph.
    """
    best: Optional[List[int]] = None
    for root in range(g.n):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        hit: Optional[Tuple[int, int]] = None
        while queue and hit is None:
            v = queue.popleft()
            if best is not None and 2 * dist[v] + 1 >= len(best):
                break
            for u in sorted(g.adj[v]):
                if u not in dist:
                    dist[u] = dist[v] + 1
                    parent[u] = v
                    queue.append(u)
                elif dist[u] == dist[v] and u > v:
                    hit = (v, u)
                    break
        if hit is None:
            continue
        left, right = [], []
        x, y = hit
        while x != -1:
            left.append(x)
            x = parent[x]
        while y != -1:
            right.append(y)
            y = parent[y]
        walk = list(reversed(left)) + right[:-1]
        if len(set(walk)) == len(walk) and (best is None or len(walk) < len(best)):
            best = walk
    return best


def count_odd_cycles(g: Graph, stop_after: int, budget: Optional[WorkBudget] = None) -> int:
    """Number of odd cycles (as subgraphs), counting stops early once it exceeds `stop_after`."""
    budget = ensure_budget(budget)
    found = 0
    for start in range(g.n):
        on_path = [False] * g.n
        on_path[start] = True
        stack = [(start, iter(sorted(u for u in g.adj[start] if u > start)), 1)]
        while stack:
            v, it, length = stack[-1]
            advanced = False
            for u in it:
                budget.spend()
                if on_path[u]:
                    continue
                if length >= 2 and start in g.adj[u] and (length + 1) % 2 == 1:
                    # each cycle is met once per direction
                    found += 1
                    if found >= 2 * (stop_after + 1):
                        return found // 2
                on_path[u] = True
                stack.append((u, iter(sorted(w for w in g.adj[u] if w > start)), length + 1))
                advanced = True
                break
            if not advanced:
                on_path[v] = False
                stack.pop()
    return found // 2


def is_almost_bipartite(g: Graph, max_n: int = 16, budget: Optional[WorkBudget] = None) -> bool:
    """True when g has exactly one odd cycle, counted among all cycles (not only induced ones)."""
    if g.n > max_n:
        raise DomainError(f"cycle enumeration is limited to {max_n} vertices, got {g.n}")
    if is_bipartite(g):
        return False
    return count_odd_cycles(g, 1, budget) == 1


def classify_pair(g: Graph, alpha: int, mu: int) -> KEClass:
    total = alpha + mu
    if is_bipartite(g):
        kind = KEKind.BIPARTITE
    elif total == g.n:
        kind = KEKind.KE_NON_BIPARTITE
    elif total == g.n - 1:
        kind = KEKind.ONE_KE
    else:
        kind = KEKind.OTHER
    return KEClass(kind=kind, n=g.n, alpha=alpha, mu=mu)


def ke_class(g: Graph, budget: Optional[WorkBudget] = None) -> KEClass:
    return classify_pair(g, independence_number(g, budget), len(max_matching(g)))


def is_ke(g: Graph, budget: Optional[WorkBudget] = None) -> bool:
    return ke_class(g, budget).is_ke


class GraphFacts:
    """Lazily computed invariants of one graph, all charged to one budget."""

    def __init__(self, g: Graph, budget: Optional[WorkBudget] = None, limits: Optional[SearchLimits] = None, seed: int = 0):
        self.g = g
        self.budget = ensure_budget(budget)
        self.limits = limits or get_search_limits("standard")
        self.seed = seed

    @cached_property
    def graph6(self) -> str:
        return encode_graph6(self.g)

    @cached_property
    def alpha(self) -> int:
        return independence_number(self.g, self.budget)

    @cached_property
    def matching(self) -> Matching:
        return max_matching(self.g)

    @cached_property
    def mu(self) -> int:
        return len(self.matching)

    @cached_property
    def ke_class(self) -> KEClass:
        return classify_pair(self.g, self.alpha, self.mu)

    @property
    def is_ke(self) -> bool:
        return self.ke_class.is_ke

    @cached_property
    def bipartite(self) -> bool:
        return is_bipartite(self.g)

    @cached_property
    def core(self) -> VertexSet:
        return core(self.g, self.budget)

    @property
    def xi(self) -> int:
        return len(self.core)

    @cached_property
    def d(self) -> int:
        return critical_difference(self.g)

    @cached_property
    def ker(self) -> VertexSet:
        return ker(self.g)

    @property
    def epsilon(self) -> int:
        return len(self.ker)

    @cached_property
    def core_neighborhood(self) -> VertexSet:
        return neighborhood(self.g, self.core)

    @cached_property
    def ker_neighborhood(self) -> VertexSet:
        return neighborhood(self.g, self.ker)

    @cached_property
    def alpha_critical_edges(self):
        return alpha_critical_edges(self.g, self.budget)

    @property
    def eta(self) -> int:
        return len(self.alpha_critical_edges)

    @cached_property
    def mu_critical_vertices(self) -> VertexSet:
        return mu_critical_vertices(self.g)

    @cached_property
    def mu_critical_edges(self):
        return mu_critical_edges(self.g)

    @cached_property
    def vertex_deletions(self) -> List[KEClass]:
        return [ke_class(delete_vertex(self.g, v), self.budget) for v in range(self.g.n)]

    @cached_property
    def edge_deletions(self) -> Dict[Edge, KEClass]:
        return {e: ke_class(delete_edge(self.g, e), self.budget) for e in self.g.edges()}

    @cached_property
    def rho_v(self) -> int:
        return sum(1 for c in self.vertex_deletions if c.is_ke)

    @cached_property
    def rho_e(self) -> int:
        return sum(1 for c in self.edge_deletions.values() if c.is_ke)

    @cached_property
    def cross_pocket(self) -> PerfectMatchingVerdict:
        """Perfect matchings between core - ker and N(core) - N(ker)."""
        return unique_perfect_matching_between(
            self.g, self.core - self.ker, self.core_neighborhood - self.ker_neighborhood
        )

    @cached_property
    def critical_witness(self) -> VertexSet:
        return find_critical_independent_set(self.g)

    @cached_property
    def odd_cycle(self) -> Optional[List[int]]:
        return shortest_odd_cycle(self.g)

    @cached_property
    def maximum_matchings(self) -> Tuple[List[Matching], bool]:
        """All maximum matchings (flag True) or a seeded sample of them (flag False)."""
        return maximum_matchings(
            self.g,
            exact_max_n=self.limits.enumerate_matchings_max_n,
            samples=self.limits.matching_samples,
            seed=self.seed,
            budget=self.budget,
        )

    @cached_property
    def omega(self) -> Tuple[List[VertexSet], bool]:
        """All maximum independent sets (flag True) or just one of them (flag False)."""
        if self.g.n <= self.limits.omega_enumeration_max_n:
            return enumerate_maximum_independent_sets(self.g, self.budget), True
        return [maximum_independent_set(self.g, self.budget)], False

    @cached_property
    def critical_sets(self) -> Optional[List[VertexSet]]:
        """Every critical independent set, or None above the brute-force size limit."""
        if self.g.n > self.limits.bruteforce_critical_max_n:
            return None
        return critical_independent_sets(self.g, self.budget)

    def require_ke(self, operation: str):
        if not self.is_ke:
            raise DomainError(f"{operation} needs a König-Egerváry graph; this one is {self.ke_class.kind.value}")

    def edge_location(self, e: Edge) -> EdgeLocation:
        u, v = e
        core_set, ker_set = self.core, self.ker
        for x, y in ((u, v), (v, u)):
            if x in ker_set:
                return EdgeLocation.KER_POCKET
            if x in core_set:
                if y in self.ker_neighborhood:
                    return EdgeLocation.CORE_MINUS_KER_TO_KER_N
                return EdgeLocation.CROSS_POCKET
        return EdgeLocation.OUTSIDE_CORE_POCKET


def rho_v(g: Graph, budget: Optional[WorkBudget] = None) -> int:
    return GraphFacts(g, budget).rho_v


def rho_v_formula(g: Graph, budget: Optional[WorkBudget] = None) -> int:
    facts = GraphFacts(g, budget)
    facts.require_ke("rho_v_formula")
    return g.n - facts.xi + facts.epsilon


def rho_e(g: Graph, budget: Optional[WorkBudget] = None) -> int:
    return GraphFacts(g, budget).rho_e


def rho_e_bound(g: Graph, budget: Optional[WorkBudget] = None) -> int:
    facts = GraphFacts(g, budget)
    facts.require_ke("rho_e_bound")
    return g.m - facts.xi + facts.epsilon


_ZONE_EXPECTS_KE = {
    VertexZone.OUTSIDE_CORE: True,
    VertexZone.CORE_MINUS_KER: False,
    VertexZone.KER: True,
}


def vertex_verdicts(facts: GraphFacts) -> List[VertexVerdict]:
    """Deletion class of every vertex; zones and consistency only for KE graphs."""
    out = []
    for v, cls in enumerate(facts.vertex_deletions):
        zone = None
        consistent = None
        if facts.is_ke:
            if v in facts.ker:
                zone = VertexZone.KER
            elif v in facts.core:
                zone = VertexZone.CORE_MINUS_KER
            else:
                zone = VertexZone.OUTSIDE_CORE
            if zone == VertexZone.CORE_MINUS_KER:
                consistent = cls.is_one_ke
            else:
                consistent = cls.is_ke == _ZONE_EXPECTS_KE[zone]
        out.append(VertexVerdict(vertex=v, label=facts.g.label(v), zone=zone, deletion_class=cls, consistent=consistent))
    return out


def classify_vertices(g: Graph, budget: Optional[WorkBudget] = None) -> List[VertexVerdict]:
    facts = GraphFacts(g, budget)
    facts.require_ke("classify_vertices")
    return vertex_verdicts(facts)


def edge_verdicts(facts: GraphFacts) -> List[EdgeVerdict]:
    """Per-edge flags. Non-KE graphs get the raw flags only, without a location."""
    out = []
    for e, cls in facts.edge_deletions.items():
        out.append(EdgeVerdict(
            u=e[0],
            v=e[1],
            location=facts.edge_location(e) if facts.is_ke else None,
            mu_critical=e in facts.mu_critical_edges,
            alpha_critical=e in facts.alpha_critical_edges,
            deletion_is_ke=cls.is_ke,
        ))
    return out


def classify_edges(g: Graph, budget: Optional[WorkBudget] = None) -> List[EdgeVerdict]:
    return edge_verdicts(GraphFacts(g, budget))


@dataclass(frozen=True)
class DecompositionChecks:
    inside_is_ke: bool
    outside_alpha_at_most_mu: bool
    alpha_splits: bool
    mu_splits: bool
    inside_alpha_is_set_size: bool
    inside_mu_is_neighborhood_size: bool

    @property
    def all_pass(self) -> bool:
        return all(vars(self).values())


@dataclass(frozen=True)
class CriticalDecomposition:
    inside: Subgraph
    outside: Subgraph
    checks: DecompositionChecks


def critical_decomposition(g: Graph, a, budget: Optional[WorkBudget] = None) -> CriticalDecomposition:
    """Split g along X = N[A] for a critical independent set A and evaluate the split identities."""
    budget = ensure_budget(budget)
    members = require_critical_independent(g, a)
    x = closed_neighborhood(g, members)
    inside = induced_subgraph(g, x)
    outside = delete_vertices(g, x)
    alpha_in = independence_number(inside.graph, budget)
    alpha_out = independence_number(outside.graph, budget)
    mu_in = len(max_matching(inside.graph))
    mu_out = len(max_matching(outside.graph))
    alpha = independence_number(g, budget)
    mu = len(max_matching(g))
    checks = DecompositionChecks(
        inside_is_ke=alpha_in + mu_in == inside.graph.n,
        outside_alpha_at_most_mu=alpha_out <= mu_out,
        alpha_splits=alpha == alpha_in + alpha_out,
        mu_splits=mu == mu_in + mu_out,
        inside_alpha_is_set_size=alpha_in == len(members),
        inside_mu_is_neighborhood_size=mu_in == len(x) - len(members),
    )
    return CriticalDecomposition(inside, outside, checks)


def formula_checks(facts: GraphFacts) -> FormulaChecks:
    if not facts.is_ke:
        return FormulaChecks()
    g = facts.g
    vertex_formula = g.n - facts.xi + facts.epsilon
    bound = g.m - facts.xi + facts.epsilon
    pairing = facts.cross_pocket.kind
    return FormulaChecks(
        rho_v_formula=vertex_formula,
        rho_v_equality=facts.rho_v == vertex_formula,
        rho_e_bound=bound,
        rho_e_lower_bound=facts.rho_e >= bound,
        cross_pocket_pairing=pairing,
        rho_e_bound_tight=(facts.rho_e == bound) == (pairing == PairingKind.UNIQUE),
    )


def open_problem_flags(facts: GraphFacts) -> List[str]:
    """Which of the open equalities a non-KE graph happens to satisfy."""
    if facts.is_ke:
        return []
    g = facts.g
    gap = facts.xi - facts.epsilon
    flags = []
    if facts.rho_e >= g.m - gap:
        flags.append("rho_e_bound_holds")
    if facts.rho_v == g.n - gap:
        flags.append("rho_v_formula_holds")
    if facts.rho_v == facts.alpha + facts.mu - gap:
        flags.append("rho_v_alpha_mu_formula_holds")
    return flags


def build_report(g: Graph, budget: Optional[WorkBudget] = None, facts: Optional[GraphFacts] = None) -> KEReport:
    facts = facts or GraphFacts(g, budget)
    return KEReport(
        graph6=facts.graph6,
        n=g.n,
        m=g.m,
        alpha=facts.alpha,
        mu=facts.mu,
        d=facts.d,
        core=sorted(facts.core),
        xi=facts.xi,
        ker=sorted(facts.ker),
        epsilon=facts.epsilon,
        eta=facts.eta,
        rho_v=facts.rho_v,
        rho_e=facts.rho_e,
        ke_class=facts.ke_class,
        vertices=vertex_verdicts(facts),
        edges=edge_verdicts(facts),
        formulas=formula_checks(facts),
        critical_witness=sorted(facts.critical_witness),
        open_problem_flags=open_problem_flags(facts),
    )

