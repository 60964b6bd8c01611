"""
Executable checks of the structural results about König-Egerváry graphs.

Each check takes the GraphFacts of one graph and returns an Outcome:
  - PASS when the statement holds on this graph,
  - FAIL with a witness naming the offending vertices or edges,
  - NOT_APPLICABLE when the graph does not meet the hypothesis.

Statements quantified over "every maximum matching" or "every critical
independent set" are checked exhaustively on small graphs and on a sample
otherwise; the outcome is then flagged as sampled.
"""

from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterable, List, Optional, Tuple

from kegraph.analysis import GraphFacts, critical_decomposition, is_almost_bipartite, ke_class, vertex_verdicts
from kegraph.config import SearchLimits
from kegraph.critical import critical_difference, difference, has_only_empty_critical, is_critical_independent, ker
from kegraph.errors import WorkBudget
from kegraph.graph import (
    Edge,
    Graph,
    VertexSet,
    closed_neighborhood,
    delete_edge,
    delete_vertex,
    delete_vertices,
    induced_subgraph,
    neighborhood,
)
from kegraph.independence import independence_number, maximum_independent_set
from kegraph.matching import Matching, matching_number, max_matching_bipartite, maximum_matchings, unique_perfect_matching_between
from kegraph.schemas import CheckStatus, EdgeLocation, PairingKind, TheoremCheck, TheoremReport

# enumerated critical sets beyond this many are not all visited
_SET_CAP = 32
_PAIR_CAP = 12


@dataclass(frozen=True)
class Outcome:
    status: CheckStatus
    witness: Optional[str] = None
    sampled: bool = False


def _pass(sampled: bool = False) -> Outcome:
    return Outcome(CheckStatus.PASS, sampled=sampled)


def _fail(witness: str, sampled: bool = False) -> Outcome:
    return Outcome(CheckStatus.FAIL, witness, sampled)


def _skip(reason: str) -> Outcome:
    return Outcome(CheckStatus.NOT_APPLICABLE, reason)


def _show(g: Graph, vertices: Iterable[int]) -> str:
    return "{" + ", ".join(g.label(v) for v in sorted(vertices)) + "}"


def _show_edge(g: Graph, e: Edge) -> str:
    return f"{g.label(e[0])}-{g.label(e[1])}"


def _show_matching(g: Graph, m: Matching) -> str:
    return "[" + ", ".join(_show_edge(g, e) for e in m.sorted_edges()) + "]"


def _matches_into(mate: dict, source: Iterable[int], target: VertexSet) -> bool:
    return all(mate.get(v, -1) in target for v in source)


def _pairs_perfectly(mate: dict, x: VertexSet, y: VertexSet) -> bool:
    """The matching restricted to x is a perfect matching between x and y."""
    return len(x) == len(y) and _matches_into(mate, x, y)


def _saturates_source(g: Graph, source: VertexSet, target: VertexSet) -> bool:
    return len(max_matching_bipartite(g, source, target)) == len(source)


def _critical_candidates(facts: GraphFacts) -> Tuple[List[VertexSet], bool]:
    """ker, the greedy witness, core when it is critical, then enumerated critical sets.

    The flag is True when the enumeration was skipped or cut short.
    """
    found = [facts.ker, facts.critical_witness]
    if is_critical_independent(facts.g, facts.core, facts.d):
        found.append(facts.core)
    enumerated = facts.critical_sets
    partial = enumerated is None or len(enumerated) > _SET_CAP
    found.extend((enumerated or [])[:_SET_CAP])
    unique: List[VertexSet] = []
    for s in found:
        if s not in unique:
            unique.append(s)
    return unique, partial


@dataclass(frozen=True)
class Check:
    name: str
    statement: str
    evaluate: Callable[[GraphFacts], Outcome]


CHECKS: List[Check] = []


def check(name: str, statement: str):
    def register(fn: Callable[[GraphFacts], Outcome]):
        CHECKS.append(Check(name, statement, fn))
        return fn
    return register


def _ke_only(facts: GraphFacts) -> Optional[Outcome]:
    if facts.is_ke:
        return None
    return _skip(f"not König-Egerváry ({facts.ke_class.kind.value})")


# --- critical difference and critical sets ---


@check("critical_difference_vs_alpha_mu", "d(G) >= alpha(G) - mu(G)")
def _critical_difference_bound(facts: GraphFacts) -> Outcome:
    if facts.d >= facts.alpha - facts.mu:
        return _pass()
    return _fail(f"d={facts.d} alpha={facts.alpha} mu={facts.mu}")


@check("independence_matching_bounds", "floor(n/2) + 1 <= alpha + mu <= n <= alpha + 2 mu")
def _bound_chain(facts: GraphFacts) -> Outcome:
    n = facts.g.n
    if n == 0:
        return _skip("empty graph")
    total = facts.alpha + facts.mu
    if n // 2 + 1 <= total <= n <= facts.alpha + 2 * facts.mu:
        return _pass()
    return _fail(f"n={n} alpha={facts.alpha} mu={facts.mu}")


@check("critical_sets_extend_and_match",
       "every critical independent set S lies in a maximum independent set and in a maximum critical "
       "independent set, and N(S) is matched into S")
def _critical_sets_extend(facts: GraphFacts) -> Outcome:
    g = facts.g
    sets, partial = _critical_candidates(facts)
    largest: List[VertexSet] = []
    if facts.critical_sets is not None:
        size = max(len(s) for s in facts.critical_sets)
        largest = [s for s in facts.critical_sets if len(s) == size]
    for s in sets:
        rest = delete_vertices(g, closed_neighborhood(g, s)).graph
        if len(s) + independence_number(rest, facts.budget) != facts.alpha:
            return _fail(f"{_show(g, s)} is in no maximum independent set", partial)
        if largest and not any(s <= big for big in largest):
            return _fail(f"{_show(g, s)} is in no maximum critical independent set", partial)
        if not _saturates_source(g, neighborhood(g, s), s):
            return _fail(f"N({_show(g, s)}) is not matched into it", partial)
    return _pass(partial)


@check("ker_minimal_critical",
       "ker(G) is contained in core(G), is the intersection of all critical independent sets, and unions "
       "and intersections of critical sets are critical")
def _ker_minimal(facts: GraphFacts) -> Outcome:
    g = facts.g
    if not facts.ker <= facts.core:
        return _fail(f"ker {_show(g, facts.ker)} not inside core {_show(g, facts.core)}")
    if not is_critical_independent(g, facts.ker, facts.d):
        return _fail(f"ker {_show(g, facts.ker)} is not a critical independent set")
    enumerated = facts.critical_sets
    if enumerated is None:
        return _pass(sampled=True)
    common = frozenset(range(g.n))
    for s in enumerated:
        common &= s
    if common != facts.ker:
        return _fail(f"intersection of critical sets is {_show(g, common)}, ker is {_show(g, facts.ker)}")
    for a, b in combinations(enumerated[:_PAIR_CAP], 2):
        for joined in (a | b, a & b):
            if difference(g, joined) != facts.d:
                return _fail(f"{_show(g, a)} and {_show(g, b)} combine into the non-critical {_show(g, joined)}")
    return _pass(len(enumerated) > _PAIR_CAP)


@check("ker_by_vertex_deletion",
       "d(G - v) = d(G) - 1 exactly for v in ker(G), and then ker(G - v) is inside ker(G) - v")
def _ker_by_deletion(facts: GraphFacts) -> Outcome:
    g = facts.g
    enumerated = facts.critical_sets
    if enumerated is not None:
        common = frozenset(range(g.n))
        for s in enumerated:
            common &= s
        for v in range(g.n):
            lowers = critical_difference(delete_vertex(g, v)) == facts.d - 1
            if lowers != (v in common):
                return _fail(f"vertex {g.label(v)}: deletion lowers d is {lowers}, in every critical set is {v in common}")
    for v in sorted(facts.ker):
        sub = delete_vertices(g, [v])
        after = sub.to_parent(ker(sub.graph))
        if not after <= facts.ker - {v}:
            return _fail(f"ker(G - {g.label(v)}) = {_show(g, after)}")
    return _pass(enumerated is None)


@check("ker_matching_characterization",
       "a critical independent set A equals ker(G) iff N(A) matches into A - v for every v in A")
def _ker_matching(facts: GraphFacts) -> Outcome:
    g = facts.g
    sets, partial = _critical_candidates(facts)
    for a in sets:
        nbrs = neighborhood(g, a)
        every = all(_saturates_source(g, nbrs, a - {v}) for v in a)
        if every != (a == facts.ker):
            return _fail(f"A={_show(g, a)}: matching test says {every}, ker is {_show(g, facts.ker)}", partial)
    return _pass(partial)


@check("ker_vertex_redundant_in_neighborhood", "if v in ker(G) and ker(G) is inside A, then N(A) = N(A - v)")
def _ker_redundant(facts: GraphFacts) -> Outcome:
    g = facts.g
    supersets = [facts.ker, facts.critical_witness, facts.core | facts.ker, frozenset(range(g.n))]
    for a in supersets:
        full = neighborhood(g, a)
        for v in facts.ker:
            if neighborhood(g, a - {v}) != full:
                return _fail(f"A={_show(g, a)}, v={g.label(v)}")
    return _pass()


@check("closed_neighborhood_keeps_ker",
       "for ker(G) inside A, H = G[N[A]] has d(H) >= d(G); when A is critical independent, d(H) = d(G) "
       "and ker(H) = ker(G)")
def _closed_neighborhood(facts: GraphFacts) -> Outcome:
    g = facts.g
    sets, partial = _critical_candidates(facts)
    for a in sets + [facts.core | facts.ker, frozenset(range(g.n))]:
        h = induced_subgraph(g, closed_neighborhood(g, a))
        dh = critical_difference(h.graph)
        if dh < facts.d:
            return _fail(f"A={_show(g, a)}: d(H)={dh} < d(G)={facts.d}", partial)
        if is_critical_independent(g, a, facts.d):
            if dh != facts.d:
                return _fail(f"A={_show(g, a)} is critical but d(H)={dh}", partial)
            kernel = h.to_parent(ker(h.graph))
            if kernel != facts.ker:
                return _fail(f"A={_show(g, a)}: ker(H)={_show(g, kernel)}", partial)
    return _pass(partial)


@check("core_minus_ker_keeps_difference",
       "for v in core(G) - ker(G): ker(G) stays critical in G - v and d(G - v) = d(G), which is alpha - mu "
       "for König-Egerváry graphs")
def _core_minus_ker(facts: GraphFacts) -> Outcome:
    g = facts.g
    rest = facts.core - facts.ker
    if not rest:
        return _skip("core equals ker")
    for v in sorted(rest):
        sub = delete_vertices(g, [v])
        dv = critical_difference(sub.graph)
        position = sub.from_parent()
        kernel = frozenset(position[u] for u in facts.ker)
        if difference(sub.graph, kernel) != dv:
            return _fail(f"ker is not critical in G - {g.label(v)}")
        if dv != facts.d:
            return _fail(f"d(G - {g.label(v)}) = {dv}, d(G) = {facts.d}")
        if facts.is_ke and dv != facts.alpha - facts.mu:
            return _fail(f"d(G - {g.label(v)}) = {dv} differs from alpha - mu")
    return _pass()


@check("nested_critical_sets_pair_perfectly",
       "for critical independent sets B inside A there is a perfect matching between A - B and N(A) - N(B), "
       "and the subgraph induced by A - B and N(A) - N(B) is König-Egerváry")
def _nested_pairing(facts: GraphFacts) -> Outcome:
    g = facts.g
    sets, partial = _critical_candidates(facts)
    b = facts.ker
    for a in sets:
        outer = a - b
        partners = neighborhood(g, a) - neighborhood(g, b)
        pairing = unique_perfect_matching_between(g, outer, partners)
        if pairing.kind not in (PairingKind.UNIQUE, PairingKind.MULTIPLE):
            return _fail(f"A={_show(g, a)}, B={_show(g, b)}: {pairing.kind.value}", partial)
        if not ke_class(induced_subgraph(g, outer | partners).graph, facts.budget).is_ke:
            return _fail(f"G[{_show(g, outer | partners)}] is not König-Egerváry", partial)
    return _pass(partial)


@check("critical_set_extends_by_matching",
       "for a critical A inside an independent S there is a matching from S - A into V - S - N(A)")
def _extension_matching(facts: GraphFacts) -> Outcome:
    g = facts.g
    everything = frozenset(range(g.n))
    omega, exact = facts.omega
    for a in (facts.ker, facts.critical_witness):
        outside = delete_vertices(g, closed_neighborhood(g, a))
        grown = a | outside.to_parent(maximum_independent_set(outside.graph, facts.budget))
        for s in [grown] + [s for s in omega if a <= s]:
            target = everything - s - neighborhood(g, a)
            if not _saturates_source(g, s - a, target):
                return _fail(f"A={_show(g, a)}, S={_show(g, s)}", not exact)
    return _pass(not exact)


@check("maximum_critical_closure_unique",
       "every maximum critical independent set A has the same X = N[A]; alpha(G) = alpha(G[X]) + alpha(G - X), "
       "G[X] is König-Egerváry and G - X has only the empty critical set")
def _max_critical_closure(facts: GraphFacts) -> Outcome:
    g = facts.g
    enumerated = facts.critical_sets
    if enumerated is None:
        return _skip(f"critical sets are enumerated only up to {facts.limits.bruteforce_critical_max_n} vertices")
    size = max(len(s) for s in enumerated)
    closures = {closed_neighborhood(g, s) for s in enumerated if len(s) == size}
    if len(closures) != 1:
        return _fail("closures " + " ".join(_show(g, x) for x in sorted(closures, key=sorted)))
    (x,) = closures
    inside = induced_subgraph(g, x).graph
    outside = delete_vertices(g, x).graph
    if independence_number(inside, facts.budget) + independence_number(outside, facts.budget) != facts.alpha:
        return _fail(f"alpha does not split along X={_show(g, x)}")
    if not ke_class(inside, facts.budget).is_ke:
        return _fail(f"G[{_show(g, x)}] is not König-Egerváry")
    if not has_only_empty_critical(outside):
        return _fail(f"G - {_show(g, x)} has a nonempty critical independent set")
    return _pass()


@check("critical_decomposition_identities",
       "for a critical independent A and X = N[A]: G[X] is König-Egerváry, alpha(G - X) <= mu(G - X), "
       "and alpha and mu split over X and G - X")
def _decomposition(facts: GraphFacts) -> Outcome:
    g = facts.g
    sets, partial = _critical_candidates(facts)
    for a in sets:
        split = critical_decomposition(g, a, facts.budget)
        if not split.checks.all_pass:
            broken = [name for name, ok in vars(split.checks).items() if not ok]
            return _fail(f"A={_show(g, a)}: {', '.join(broken)}", partial)
    return _pass(partial)


# --- König-Egerváry characterizations ---


@check("ke_characterizations",
       "G is König-Egerváry iff some maximum independent set S admits a matching from V - S into S, "
       "iff every maximum independent set is critical, iff some is; then every maximum matching "
       "matches V - S into S")
def _ke_characterizations(facts: GraphFacts) -> Outcome:
    g = facts.g
    omega, exact = facts.omega
    everything = frozenset(range(g.n))
    s = omega[0]
    split_matching = _saturates_source(g, everything - s, s)
    critical = [difference(g, t) == facts.d for t in omega]
    claims = {
        "matching into S": split_matching,
        "some S critical": any(critical),
    }
    if exact:
        claims["every S critical"] = all(critical)
    for claim, value in claims.items():
        if value != facts.is_ke:
            return _fail(f"{claim} is {value} while König-Egerváry is {facts.is_ke}", not exact)
    if facts.is_ke:
        matchings, all_matchings = facts.maximum_matchings
        for m in matchings:
            mate = m.mate_map()
            for t in omega:
                if not _matches_into(mate, everything - t, t):
                    return _fail(f"{_show_matching(g, m)} does not match V - S into S={_show(g, t)}",
                                 not (exact and all_matchings))
        return _pass(not (exact and all_matchings))
    return _pass(not exact)


@check("ke_core_structure",
       "in a König-Egerváry graph every maximum matching matches N(core) into core, G - N[core] is "
       "König-Egerváry with a perfect matching, and |core| - |N(core)| = alpha - mu = d")
def _ke_core_structure(facts: GraphFacts) -> Outcome:
    skip = _ke_only(facts)
    if skip:
        return skip
    g = facts.g
    gap = facts.xi - len(facts.core_neighborhood)
    if not gap == facts.alpha - facts.mu == facts.d:
        return _fail(f"|core| - |N(core)| = {gap}, alpha - mu = {facts.alpha - facts.mu}, d = {facts.d}")
    rest = delete_vertices(g, closed_neighborhood(g, facts.core)).graph
    rest_mu = matching_number(rest)
    if 2 * rest_mu != rest.n or not ke_class(rest, facts.budget).is_ke:
        return _fail("G - N[core] is not König-Egerváry with a perfect matching")
    matchings, exact = facts.maximum_matchings
    for m in matchings:
        if not _matches_into(m.mate_map(), facts.core_neighborhood, facts.core):
            return _fail(f"{_show_matching(g, m)} leaves N(core) unmatched into core", not exact)
    return _pass(not exact)


@check("single_core_vertex_is_leaf",
       "a König-Egerváry graph without isolated vertices and core = {v} has a perfect matching and v is a leaf")
def _single_core_vertex(facts: GraphFacts) -> Outcome:
    g = facts.g
    if not facts.is_ke or g.isolated_vertices() or facts.xi != 1:
        return _skip("needs a König-Egerváry graph without isolated vertices and a one-vertex core")
    (v,) = facts.core
    if 2 * facts.mu != g.n:
        return _fail(f"no perfect matching, mu={facts.mu}")
    if g.degree(v) != 1:
        return _fail(f"core vertex {g.label(v)} has degree {g.degree(v)}")
    return _pass()


@check("induced_non_ke_witness",
       "a non-bipartite König-Egerváry graph has an induced subgraph that is not König-Egerváry")
def _induced_witness(facts: GraphFacts) -> Outcome:
    if not facts.is_ke or facts.bipartite:
        return _skip("needs a non-bipartite König-Egerváry graph")
    g = facts.g
    cycle = facts.odd_cycle
    h = induced_subgraph(g, cycle).graph
    if any(h.degree(v) != 2 for v in range(h.n)):
        return _fail(f"shortest odd cycle {_show(g, cycle)} has a chord")
    if ke_class(h, facts.budget).is_ke:
        return _fail(f"induced odd cycle {_show(g, cycle)} is König-Egerváry")
    return _pass()


@check("almost_bipartite_near_ke", "an almost bipartite graph has n - 1 <= alpha + mu <= n")
def _almost_bipartite(facts: GraphFacts) -> Outcome:
    g = facts.g
    if g.n > facts.limits.cycle_enumeration_max_n:
        return _skip(f"odd cycles are counted only up to {facts.limits.cycle_enumeration_max_n} vertices")
    if not is_almost_bipartite(g, facts.limits.cycle_enumeration_max_n, facts.budget):
        return _skip("not almost bipartite")
    total = facts.alpha + facts.mu
    if g.n - 1 <= total <= g.n:
        return _pass()
    return _fail(f"alpha + mu = {total}, n = {g.n}")


@check("ker_equals_core_when_bipartite",
       "ker(G) = core(G) for bipartite graphs and for almost bipartite graphs that are not König-Egerváry")
def _ker_equals_core(facts: GraphFacts) -> Outcome:
    g = facts.g
    applies = facts.bipartite
    if not applies and not facts.is_ke and g.n <= facts.limits.cycle_enumeration_max_n:
        applies = is_almost_bipartite(g, facts.limits.cycle_enumeration_max_n, facts.budget)
    if not applies:
        return _skip("neither bipartite nor almost bipartite non-König-Egerváry")
    if facts.ker == facts.core:
        return _pass()
    return _fail(f"ker={_show(g, facts.ker)} core={_show(g, facts.core)}")


# --- vertex heredity ---


@check("vertex_deletion_trichotomy",
       "in a König-Egerváry graph G - v is König-Egerváry off core(G) and on ker(G), 1-König-Egerváry on "
       "core(G) - ker(G), and rho_v = n - xi + eps")
def _vertex_trichotomy(facts: GraphFacts) -> Outcome:
    skip = _ke_only(facts)
    if skip:
        return skip
    g = facts.g
    for verdict in vertex_verdicts(facts):
        if not verdict.consistent:
            return _fail(f"vertex {verdict.label} in zone {verdict.zone.value} deletes to {verdict.deletion_class.kind.value}")
    formula = g.n - facts.xi + facts.epsilon
    if facts.rho_v != formula:
        return _fail(f"rho_v = {facts.rho_v}, n - xi + eps = {formula}")
    return _pass()


@check("some_vertex_deletion_keeps_ke", "a nonempty König-Egerváry graph has rho_v > 0")
def _rho_v_positive(facts: GraphFacts) -> Outcome:
    skip = _ke_only(facts)
    if skip:
        return skip
    if facts.g.n == 0:
        return _skip("empty graph")
    return _pass() if facts.rho_v > 0 else _fail("rho_v = 0")


@check("core_vertex_not_mu_critical",
       "in a König-Egerváry graph, for v with G - v König-Egerváry: v in core(G) iff v is not mu-critical")
def _core_not_mu_critical(facts: GraphFacts) -> Outcome:
    skip = _ke_only(facts)
    if skip:
        return skip
    g = facts.g
    for v, cls in enumerate(facts.vertex_deletions):
        if cls.is_ke and (v in facts.core) == (v in facts.mu_critical_vertices):
            return _fail(f"vertex {g.label(v)}")
    return _pass()


@check("core_vertex_missed_by_some_maximum_matching",
       "in a König-Egerváry graph, for v with G - v König-Egerváry: v in core(G) iff some maximum matching "
       "leaves v exposed")
def _core_exposed(facts: GraphFacts) -> Outcome:
    skip = _ke_only(facts)
    if skip:
        return skip
    g = facts.g
    matchings, exact = facts.maximum_matchings
    for v, cls in enumerate(facts.vertex_deletions):
        if not cls.is_ke:
            continue
        exposed = any(not m.saturates(v) for m in matchings)
        # a sample can only prove exposure
        if exposed and v not in facts.core:
            return _fail(f"vertex {g.label(v)} is exposed but outside core", not exact)
        if exact and not exposed and v in facts.core:
            return _fail(f"core vertex {g.label(v)} is saturated by every maximum matching")
    return _pass(not exact)


@check("ker_is_core_not_mu_critical",
       "in a König-Egerváry graph v in ker(G) iff v in core(G) and v is not mu-critical")
def _ker_core_mu(facts: GraphFacts) -> Outcome:
    skip = _ke_only(facts)
    if skip:
        return skip
    g = facts.g
    for v in range(g.n):
        predicted = v in facts.core and v not in facts.mu_critical_vertices
        if predicted != (v in facts.ker):
            return _fail(f"vertex {g.label(v)}")
    return _pass()


@check("alpha_critical_edges_bound", "a König-Egerváry graph has eta <= alpha - xi")
def _eta_bound(facts: GraphFacts) -> Outcome:
    skip = _ke_only(facts)
    if skip:
        return skip
    if facts.eta <= facts.alpha - facts.xi:
        return _pass()
    return _fail(f"eta={facts.eta} alpha={facts.alpha} xi={facts.xi}")


@check("alpha_mu_gap_at_most_core", "a graph without isolated vertices has alpha - mu <= xi")
def _gap_at_most_core(facts: GraphFacts) -> Outcome:
    if facts.g.isolated_vertices():
        return _skip("has isolated vertices")
    if facts.alpha - facts.mu <= facts.xi:
        return _pass()
    return _fail(f"alpha={facts.alpha} mu={facts.mu} xi={facts.xi}")


@check("vertex_heredity_bounds",
       "a König-Egerváry graph has eta + mu + eps <= rho_v <= 2 mu + eps, with both equalities iff eta = mu")
def _vertex_bounds(facts: GraphFacts) -> Outcome:
    skip = _ke_only(facts)
    if skip:
        return skip
    low = facts.eta + facts.mu + facts.epsilon
    high = 2 * facts.mu + facts.epsilon
    if not low <= facts.rho_v <= high:
        return _fail(f"{low} <= rho_v={facts.rho_v} <= {high} fails")
    if (low == facts.rho_v == high) != (facts.eta == facts.mu):
        return _fail(f"eta={facts.eta} mu={facts.mu} rho_v={facts.rho_v}")
    return _pass()


@check("core_equals_ker_iff_full_vertex_heredity",
       "in a König-Egerváry graph rho_v = n iff core(G) = ker(G), and then rho_e = m")
def _full_heredity(facts: GraphFacts) -> Outcome:
    skip = _ke_only(facts)
    if skip:
        return skip
    g = facts.g
    equal = facts.core == facts.ker
    if (facts.rho_v == g.n) != equal:
        return _fail(f"rho_v={facts.rho_v} n={g.n} core={_show(g, facts.core)} ker={_show(g, facts.ker)}")
    if equal and facts.rho_e != g.m:
        return _fail(f"core = ker but rho_e={facts.rho_e} < m={g.m}")
    return _pass()


# --- edges and maximum matchings ---


@check("maximum_matchings_pair_pockets",
       "in a König-Egerváry graph every maximum matching pairs N(S) - N(core) with S - core, "
       "N(core) - N(ker) with core - ker, and N(S) - N(ker) with S - ker, for every maximum independent S")
def _pockets(facts: GraphFacts) -> Outcome:
    skip = _ke_only(facts)
    if skip:
        return skip
    g = facts.g
    matchings, all_matchings = facts.maximum_matchings
    omega, all_sets = facts.omega
    sampled = not (all_matchings and all_sets)
    core_n, ker_n = facts.core_neighborhood, facts.ker_neighborhood
    for m in matchings:
        mate = m.mate_map()
        if not _pairs_perfectly(mate, core_n - ker_n, facts.core - facts.ker):
            return _fail(f"{_show_matching(g, m)} on N(core) - N(ker)", sampled)
        for s in omega:
            s_n = neighborhood(g, s)
            if not _pairs_perfectly(mate, s_n - core_n, s - facts.core):
                return _fail(f"{_show_matching(g, m)} on N(S) - N(core), S={_show(g, s)}", sampled)
            if not _pairs_perfectly(mate, s_n - ker_n, s - facts.ker):
                return _fail(f"{_show_matching(g, m)} on N(S) - N(ker), S={_show(g, s)}", sampled)
    return _pass(sampled)


@check("ker_matchings_extend",
       "in a König-Egerváry graph every maximum matching of G[N[ker]] extends to a maximum matching of G, "
       "and every maximum matching of G restricts to a maximum matching of G[N[ker]]")
def _ker_matchings(facts: GraphFacts) -> Outcome:
    skip = _ke_only(facts)
    if skip:
        return skip
    g = facts.g
    closure = closed_neighborhood(g, facts.ker)
    h = induced_subgraph(g, closure)
    local, exact_local = maximum_matchings(
        h.graph,
        exact_max_n=facts.limits.enumerate_matchings_max_n,
        samples=facts.limits.matching_samples,
        seed=facts.seed,
        budget=facts.budget,
    )
    h_mu = matching_number(h.graph)
    for m in local:
        pairs = Matching.from_pairs((h.parent[u], h.parent[v]) for u, v in m.edges)
        rest = delete_vertices(g, pairs.saturated).graph
        if len(pairs) + matching_number(rest) != facts.mu:
            return _fail(f"{_show_matching(g, pairs)} does not extend", not exact_local)
    matchings, exact = facts.maximum_matchings
    for m in matchings:
        trace = sum(1 for u, v in m.edges if u in closure and v in closure)
        if trace != h_mu:
            return _fail(f"{_show_matching(g, m)} leaves {trace} of {h_mu} edges in G[N[ker]]", not exact)
    return _pass(not (exact and exact_local))


@check("mu_critical_edges_at_most_mu",
       "the mu-critical edges number at most mu and lie in every maximum matching")
def _mu_critical_count(facts: GraphFacts) -> Outcome:
    g = facts.g
    critical = facts.mu_critical_edges
    if len(critical) > facts.mu:
        return _fail(f"{len(critical)} mu-critical edges, mu={facts.mu}")
    matchings, exact = facts.maximum_matchings
    for m in matchings:
        missing = critical - m.edges
        if missing:
            return _fail(f"{_show_edge(g, min(missing))} missing from {_show_matching(g, m)}", not exact)
    return _pass(not exact)


@check("no_alpha_critical_edge_at_core_neighborhood", "no alpha-critical edge has an endpoint in N(core)")
def _alpha_critical_location(facts: GraphFacts) -> Outcome:
    g = facts.g
    for u, v in sorted(facts.alpha_critical_edges):
        if u in facts.core_neighborhood or v in facts.core_neighborhood:
            return _fail(_show_edge(g, (u, v)))
    return _pass()


@check("ker_edges_avoidable_and_usable",
       "every edge e between ker and N(ker) is avoided by one matching of N(ker) into ker and used by another")
def _ker_edges(facts: GraphFacts) -> Outcome:
    g = facts.g
    kernel, nbrs = facts.ker, facts.ker_neighborhood
    if not kernel:
        return _skip("ker is empty")
    for y in sorted(nbrs):
        for x in sorted(g.adj[y] & kernel):
            if not _saturates_source(g, nbrs - {y}, kernel - {x}):
                return _fail(f"no matching of N(ker) into ker uses {_show_edge(g, (x, y))}")
            if not _saturates_source(delete_edge(g, (x, y)), nbrs, kernel):
                return _fail(f"every matching of N(ker) into ker uses {_show_edge(g, (x, y))}")
    return _pass()


@check("outside_core_pocket_edges_keep_ke",
       "in a König-Egerváry graph G - e is König-Egerváry for every edge e outside (core, N(core))")
def _outside_edges(facts: GraphFacts) -> Outcome:
    skip = _ke_only(facts)
    if skip:
        return skip
    g = facts.g
    for e, cls in facts.edge_deletions.items():
        if facts.edge_location(e) == EdgeLocation.OUTSIDE_CORE_POCKET and not cls.is_ke:
            return _fail(_show_edge(g, e))
    return _pass()


@check("edge_localization",
       "in a König-Egerváry graph mu-critical edges of (core, N(core)) lie only in "
       "(core - ker, N(core) - N(ker)), number at most xi - eps, and rho_e >= m - xi + eps")
def _edge_localization(facts: GraphFacts) -> Outcome:
    skip = _ke_only(facts)
    if skip:
        return skip
    g = facts.g
    inside = 0
    for e in sorted(facts.mu_critical_edges):
        where = facts.edge_location(e)
        if where in (EdgeLocation.KER_POCKET, EdgeLocation.CORE_MINUS_KER_TO_KER_N):
            return _fail(f"mu-critical edge {_show_edge(g, e)} in {where.value}")
        if where == EdgeLocation.CROSS_POCKET:
            inside += 1
    gap = facts.xi - facts.epsilon
    if inside > gap:
        return _fail(f"{inside} mu-critical edges in (core, N(core)), xi - eps = {gap}")
    if facts.cross_pocket.kind not in (PairingKind.UNIQUE, PairingKind.MULTIPLE):
        return _fail(f"core - ker and N(core) - N(ker) pair as {facts.cross_pocket.kind.value}")
    if facts.rho_e < g.m - gap:
        return _fail(f"rho_e = {facts.rho_e} < m - xi + eps = {g.m - gap}")
    return _pass()


@check("edge_bound_tight_iff_unique_pairing",
       "in a König-Egerváry graph rho_e = m - xi + eps iff (core - ker, N(core) - N(ker)) has a unique "
       "perfect matching")
def _bound_tightness(facts: GraphFacts) -> Outcome:
    skip = _ke_only(facts)
    if skip:
        return skip
    bound = facts.g.m - facts.xi + facts.epsilon
    unique = facts.cross_pocket.kind == PairingKind.UNIQUE
    if (facts.rho_e == bound) == unique:
        return _pass()
    return _fail(f"rho_e={facts.rho_e} bound={bound} pairing={facts.cross_pocket.kind.value}")


@check("single_gap_edge_heredity", "a König-Egerváry graph with eps = xi - 1 has rho_e = m - 1")
def _single_gap(facts: GraphFacts) -> Outcome:
    if not facts.is_ke or facts.epsilon != facts.xi - 1:
        return _skip("needs a König-Egerváry graph with eps = xi - 1")
    if facts.rho_e == facts.g.m - 1:
        return _pass()
    return _fail(f"rho_e={facts.rho_e} m={facts.g.m}")


@check("edge_heredity_gap_spectrum",
       "in a König-Egerváry graph m - rho_e counts the mu-critical edges of (core, N(core)) and never "
       "equals xi - eps - 1")
def _gap_spectrum(facts: GraphFacts) -> Outcome:
    skip = _ke_only(facts)
    if skip:
        return skip
    g = facts.g
    lost = g.m - facts.rho_e
    pocket = sum(1 for e in facts.mu_critical_edges if facts.edge_location(e) != EdgeLocation.OUTSIDE_CORE_POCKET)
    if lost != pocket:
        return _fail(f"m - rho_e = {lost}, mu-critical edges in (core, N(core)) = {pocket}")
    if lost == facts.xi - facts.epsilon - 1:
        return _fail(f"m - rho_e = xi - eps - 1 = {lost}")
    return _pass()


@check("equal_core_ker_keeps_every_edge", "a König-Egerváry graph with core(G) = ker(G) has rho_e = m")
def _equal_core_ker(facts: GraphFacts) -> Outcome:
    if not facts.is_ke or facts.core != facts.ker:
        return _skip("needs a König-Egerváry graph with core = ker")
    if facts.rho_e == facts.g.m:
        return _pass()
    return _fail(f"rho_e={facts.rho_e} m={facts.g.m}")


@check("edge_bound_vs_alpha_critical_edges", "a König-Egerváry graph has m - xi + eps >= eta and rho_e >= eta")
def _edge_bound_eta(facts: GraphFacts) -> Outcome:
    skip = _ke_only(facts)
    if skip:
        return skip
    bound = facts.g.m - facts.xi + facts.epsilon
    if bound < facts.eta:
        return _fail(f"m - xi + eps = {bound} < eta = {facts.eta}")
    if facts.rho_e < facts.eta:
        return _fail(f"rho_e = {facts.rho_e} < eta = {facts.eta}")
    return _pass()


@check("vertex_deficit_covers_edge_deficit",
       "a König-Egerváry graph has n - rho_v >= m - rho_e, with equality when xi - eps <= 1")
def _deficits(facts: GraphFacts) -> Outcome:
    skip = _ke_only(facts)
    if skip:
        return skip
    g = facts.g
    vertex_gap = g.n - facts.rho_v
    edge_gap = g.m - facts.rho_e
    if vertex_gap < edge_gap:
        return _fail(f"n - rho_v = {vertex_gap} < m - rho_e = {edge_gap}")
    if facts.xi - facts.epsilon <= 1 and vertex_gap != edge_gap:
        return _fail(f"xi - eps <= 1 but n - rho_v = {vertex_gap}, m - rho_e = {edge_gap}")
    return _pass()


def run_check(item: Check, facts: GraphFacts) -> TheoremCheck:
    outcome = item.evaluate(facts)
    return TheoremCheck(
        name=item.name,
        statement=item.statement,
        status=outcome.status,
        witness=outcome.witness,
        sampled=outcome.sampled and outcome.status != CheckStatus.NOT_APPLICABLE,
    )


def theorem_suite(g: Graph, budget: Optional[WorkBudget] = None, limits: Optional[SearchLimits] = None,
                  seed: int = 0, facts: Optional[GraphFacts] = None) -> TheoremReport:
    """Run every registered check on g. Raises BudgetExceeded when the shared budget runs out."""
    facts = facts or GraphFacts(g, budget, limits, seed)
    return TheoremReport(
        graph6=facts.graph6,
        n=g.n,
        m=g.m,
        is_ke=facts.is_ke,
        checks=[run_check(item, facts) for item in CHECKS],
    )


def check_names() -> List[str]:
    return [item.name for item in CHECKS]
