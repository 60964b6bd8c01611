"""Deterministic and seeded graph families."""

import random
from dataclasses import dataclass
from typing import Callable, Dict, List, Sequence, Tuple

from kegraph.errors import DomainError
from kegraph.graph import Graph, edges_between
from kegraph.matching import mu_critical_edges


def cycle(k: int) -> Graph:
    if k < 3:
        raise DomainError(f"a cycle needs at least 3 vertices, got {k}")
    return Graph.from_edges(k, [(i, (i + 1) % k) for i in range(k)])


def path(k: int) -> Graph:
    if k < 1:
        raise DomainError(f"a path needs at least 1 vertex, got {k}")
    return Graph.from_edges(k, [(i, i + 1) for i in range(k - 1)])


def complete(k: int) -> Graph:
    if k < 1:
        raise DomainError(f"a complete graph needs at least 1 vertex, got {k}")
    return Graph.from_edges(k, [(i, j) for j in range(k) for i in range(j)])


def complete_minus_edge(k: int) -> Graph:
    """K_k without the edge joining its two highest vertices."""
    if k < 2:
        raise DomainError(f"complete_minus_edge needs at least 2 vertices, got {k}")
    return Graph.from_edges(k, [(i, j) for j in range(k) for i in range(j) if (i, j) != (k - 2, k - 1)])


def star(k: int) -> Graph:
    """K_{1,k}: centre 0 joined to leaves 1..k."""
    if k < 1:
        raise DomainError(f"a star needs at least 1 leaf, got {k}")
    return Graph.from_edges(k + 1, [(0, i) for i in range(1, k + 1)])


def complete_bipartite(p: int, q: int) -> Graph:
    if p < 1 or q < 1:
        raise DomainError(f"both sides of K_(p,q) must be non-empty, got {p} and {q}")
    return Graph.from_edges(p + q, [(i, p + j) for i in range(p) for j in range(q)])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def gen_random_ke(s: int, a: int, extra_edge_prob: float, seed: int) -> Graph:
    """Random graph S*A that is König-Egerváry by construction.

    S = {0..s-1} stays independent, A = {s..s+a-1} is matched into S by a
    seeded random injection, and every other (S, A) pair and every pair
    inside A is added with probability `extra_edge_prob`.
    """
    if a < 1 or a > s:
        raise DomainError(f"need 1 <= a <= s, got s={s}, a={a}")
    if not 0.0 <= extra_edge_prob <= 1.0:
        raise DomainError(f"edge probability must lie in [0, 1], got {extra_edge_prob}")
    rng = random.Random(seed)
    targets = rng.sample(range(s), a)
    edges = {(targets[i], s + i) for i in range(a)}
    for x in range(s):
        for i in range(a):
            if (x, s + i) not in edges and rng.random() < extra_edge_prob:
                edges.add((x, s + i))
    for i in range(a):
        for j in range(i + 1, a):
            if rng.random() < extra_edge_prob:
                edges.add((s + i, s + j))
    return Graph.from_edges(s + a, sorted(edges))


def gen_gpq(p: int, q: int) -> Graph:
    """The family built on a clique a_1..a_p with pendant-like partners b_1..b_p.

    Every b_i is joined to a_i; b_1..b_q are also joined to every a_j. The
    b vertices form the core, ker is empty, and exactly p - q edges between
    the core and its neighborhood lie in every maximum matching.
    """
    if q < 2 or p < q:
        raise DomainError(f"need p >= q >= 2, got p={p}, q={q}")
    a = list(range(p))
    b = list(range(p, 2 * p))
    edges = [(a[i], a[j]) for j in range(p) for i in range(j)]
    for i in range(p):
        if i < q:
            edges.extend((a[j], b[i]) for j in range(p))
        else:
            edges.append((a[i], b[i]))
    labels = [f"a{i + 1}" for i in range(p)] + [f"b{i + 1}" for i in range(p)]
    g = Graph.from_edges(2 * p, edges, labels)
    pocket = set(edges_between(g, b, a))
    found = len(mu_critical_edges(g) & pocket)
    if found != p - q:
        raise RuntimeError(f"G({p}, {q}) has {found} mu-critical core edges, expected {p - q}")
    return g


def gen_hk(k: int) -> Graph:
    """Odd cycle on 0..2k with a pendant vertex w = 2k+1 attached at v = 0."""
    if k < 1:
        raise DomainError(f"k must be at least 1, got {k}")
    size = 2 * k + 1
    edges = [(i, (i + 1) % size) for i in range(size)] + [(0, size)]
    labels = ["v"] + [f"c{i}" for i in range(1, size)] + ["w"]
    return Graph.from_edges(size + 1, edges, labels)


@dataclass
class Family:
    """A generator exposed on the command line, with its parameter types."""
    build: Callable[..., Graph]
    params: Tuple[type, ...]
    seeded: bool = False
    usage: str = ""


FAMILIES: Dict[str, Family] = {
    "cycle": Family(cycle, (int,), usage="cycle <k>"),
    "path": Family(path, (int,), usage="path <k>"),
    "complete": Family(complete, (int,), usage="complete <k>"),
    "complete_minus_edge": Family(complete_minus_edge, (int,), usage="complete_minus_edge <k>"),
    "star": Family(star, (int,), usage="star <k>"),
    "complete_bipartite": Family(complete_bipartite, (int, int), usage="complete_bipartite <p> <q>"),
    "petersen": Family(petersen, (), usage="petersen"),
    "ke": Family(gen_random_ke, (int, int, float), seeded=True, usage="ke <s> <a> <p>"),
    "gpq": Family(gen_gpq, (int, int), usage="gpq <p> <q>"),
    "hk": Family(gen_hk, (int,), usage="hk <k>"),
}


def generate(family: str, params: Sequence[str], count: int = 1, seed: int = 0) -> List[Graph]:
    """Build `count` graphs of a named family. Seeded families use seeds seed, seed+1, ..."""
    if family not in FAMILIES:
        raise DomainError(f"unknown family {family!r}; choose from {', '.join(sorted(FAMILIES))} or gallery:<name>")
    spec = FAMILIES[family]
    if len(params) != len(spec.params):
        raise DomainError(f"usage: gen {spec.usage}")
    try:
        values = [kind(raw) for kind, raw in zip(spec.params, params)]
    except ValueError:
        raise DomainError(f"usage: gen {spec.usage}") from None
    if spec.seeded:
        return [spec.build(*values, seed + i) for i in range(count)]
    return [spec.build(*values) for _ in range(count)]
