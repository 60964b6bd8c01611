"""
Batch drivers behind the command line: the analyze stream, the verify
aggregation and the gallery table.

Per-graph work is pure, so with jobs > 1 the graphs are handed to a
multiprocessing pool in fixed-size batches. Pool.map keeps batch order, and
the batches are consumed one after another, so results come back in input
order while memory stays bounded by one batch.
"""

import sys
from dataclasses import dataclass, field
from itertools import islice
from multiprocessing import Pool
from typing import Callable, Dict, Iterable, Iterator, List, Optional, Tuple, TypeVar, Union

from networkx.generators.atlas import graph_atlas_g

from kegraph.analysis import GraphFacts, build_report, open_problem_flags
from kegraph.config import RunConfig, SearchLimits
from kegraph.critical import max_critical_independent_set_bruteforce
from kegraph.errors import BudgetExceeded, GraphParseError, WorkBudget
from kegraph.formats import encode_graph6, read_graphs
from kegraph.gallery import gallery_cells, mismatches, paper_gallery
from kegraph.generators import gen_random_ke
from kegraph.graph import Graph
from kegraph.schemas import CheckStatus, CheckTally, ErrorRecord, GalleryCell, KEReport, TheoremReport, VerifySummary
from kegraph.theorems import check_names, theorem_suite

GREEDY_COMPARE_MAX_N = 16
OPEN_PROBLEM_EXAMPLES = 10
BATCH_PER_JOB = 16

T = TypeVar("T")
R = TypeVar("R")


def parallel_map(fn: Callable[[T], R], items: Iterable[T], jobs: int = 1) -> Iterator[R]:
    """Lazy, order-preserving map. `fn` must be a module-level function when jobs > 1."""
    if jobs <= 1:
        for item in items:
            yield fn(item)
        return
    it = iter(items)
    with Pool(processes=jobs) as pool:
        while True:
            batch = list(islice(it, jobs * BATCH_PER_JOB))
            if not batch:
                return
            yield from pool.map(fn, batch)


# analyze

@dataclass
class AnalyzeTask:
    index: int
    line: int
    graph: Optional[Graph]
    parse_error: Optional[str]
    budget: int
    limits: SearchLimits
    seed: int = 0


def _analyze_one(task: AnalyzeTask) -> Union[KEReport, ErrorRecord]:
    if task.parse_error is not None:
        return ErrorRecord(index=task.index, line=task.line, kind="parse", error=task.parse_error)
    g = task.graph
    try:
        facts = GraphFacts(g, WorkBudget(task.budget), task.limits, task.seed)
        return build_report(g, facts=facts)
    except BudgetExceeded as exc:
        return ErrorRecord(index=task.index, line=task.line, graph6=encode_graph6(g), kind="budget", error=str(exc))


def analyze_stream(lines: Iterable[str], config: RunConfig,
                   on_warning: Optional[Callable[[str], None]] = None) -> Iterator[Union[KEReport, ErrorRecord]]:
    """One KEReport per input graph, in input order.

    Malformed graph6 lines and budget exhaustion become ErrorRecords and the
    stream goes on; with `config.strict` a budget error raises BudgetExceeded
    instead.
    """

    def tasks() -> Iterator[AnalyzeTask]:
        for parsed in read_graphs(lines):
            if on_warning is not None:
                for warning in parsed.warnings:
                    on_warning(warning)
            error = None if parsed.error is None else str(parsed.error)
            yield AnalyzeTask(parsed.index, parsed.line, parsed.graph, error, config.budget, config.limits, config.seed)

    for result in parallel_map(_analyze_one, tasks(), config.jobs):
        if config.strict and isinstance(result, ErrorRecord) and result.kind == "budget":
            raise BudgetExceeded(config.budget)
        yield result


# verify sources

def gallery_graphs() -> Iterator[Graph]:
    for fixture in paper_gallery():
        yield fixture.graph


def census_graphs(lines: Iterable[str]) -> Iterator[Graph]:
    """Graphs of a census stream. A malformed line stops the run."""
    for parsed in read_graphs(lines):
        if parsed.error is not None:
            raise parsed.error
        yield parsed.graph


def atlas_census(max_n: int) -> Iterator[Graph]:
    """Every graph of the networkx atlas on at most `max_n` vertices, one per isomorphism class."""
    for nxg in graph_atlas_g():
        if nxg.number_of_nodes() > max_n:
            break
        index = {v: i for i, v in enumerate(sorted(nxg.nodes()))}
        yield Graph.from_edges(len(index), ((index[u], index[v]) for u, v in nxg.edges()))


def random_ke_graphs(s: int, a: int, p: float, count: int, seed: int) -> Iterator[Graph]:
    for i in range(count):
        yield gen_random_ke(s, a, p, seed + i)


# verify

@dataclass
class VerifyTask:
    graph: Graph
    budget: int
    limits: SearchLimits
    seed: int = 0


@dataclass
class GraphVerdict:
    """What one graph contributes to the verify summary."""
    graph6: str
    report: Optional[TheoremReport] = None
    greedy: Optional[Tuple[int, int]] = None
    flags: List[str] = field(default_factory=list)
    error: Optional[str] = None


def _verify_one(task: VerifyTask) -> GraphVerdict:
    g = task.graph
    verdict = GraphVerdict(graph6=encode_graph6(g))
    budget = WorkBudget(task.budget)
    try:
        facts = GraphFacts(g, budget, task.limits, task.seed)
        verdict.report = theorem_suite(g, facts=facts)
        if g.n <= GREEDY_COMPARE_MAX_N:
            exact = max_critical_independent_set_bruteforce(g, budget)
            verdict.greedy = (len(facts.critical_witness), len(exact))
        verdict.flags = open_problem_flags(facts)
    except BudgetExceeded as exc:
        verdict.report = None
        verdict.error = str(exc)
    return verdict


class VerifyAggregator:
    """Folds per-graph verdicts into a VerifySummary, keeping the first failure of every check."""

    def __init__(self, source: str):
        self.summary = VerifySummary(source=source)
        self._tallies: Dict[str, CheckTally] = {name: CheckTally(name=name) for name in check_names()}

    def add(self, verdict: GraphVerdict):
        s = self.summary
        s.graphs += 1
        if verdict.error is not None:
            s.errors += 1
            return
        report = verdict.report
        if report.is_ke:
            s.ke_graphs += 1
        for result in report.checks:
            tally = self._tallies[result.name]
            if result.status == CheckStatus.PASS:
                tally.passed += 1
            elif result.status == CheckStatus.FAIL:
                tally.failed += 1
                if tally.first_failure is None:
                    tally.first_failure = report.graph6
                    tally.first_failure_witness = result.witness
            else:
                tally.not_applicable += 1
            if result.sampled:
                tally.sampled += 1
        if verdict.greedy is not None:
            s.greedy_compared += 1
            greedy, exact = verdict.greedy
            if greedy == exact:
                s.greedy_maximum += 1
        for flag in verdict.flags:
            s.open_problem_counts[flag] = s.open_problem_counts.get(flag, 0) + 1
            examples = s.open_problem_examples.setdefault(flag, [])
            if len(examples) < OPEN_PROBLEM_EXAMPLES:
                examples.append(verdict.graph6)

    def finish(self) -> VerifySummary:
        self.summary.tallies = list(self._tallies.values())
        return self.summary


def verify_graphs(graphs: Iterable[Graph], source: str, config: RunConfig,
                  on_error: Optional[Callable[[str, str], None]] = None) -> VerifySummary:
    """Run the theorem suite over a graph population and aggregate the results.

    `on_error(graph6, message)` is called for every graph that ran out of
    budget; with `config.strict` the first one raises BudgetExceeded.
    """
    aggregator = VerifyAggregator(source)
    tasks = (VerifyTask(g, config.budget, config.limits, config.seed) for g in graphs)
    for verdict in parallel_map(_verify_one, tasks, config.jobs):
        if verdict.error is not None:
            if config.strict:
                raise BudgetExceeded(config.budget)
            if on_error is not None:
                on_error(verdict.graph6, verdict.error)
        aggregator.add(verdict)
    return aggregator.finish()


def verify_gallery(config: RunConfig, on_error: Optional[Callable[[str, str], None]] = None) -> Tuple[VerifySummary, List[GalleryCell]]:
    """Theorem suite over the bundled gallery plus the stated-value comparison."""
    summary = verify_graphs(gallery_graphs(), "gallery", config, on_error)
    cells = gallery_cells(limits=config.limits)
    summary.gallery_mismatches = len(mismatches(cells))
    return summary, cells


def read_census(path: str) -> Iterator[str]:
    if path == "-":
        yield from sys.stdin
        return
    try:
        with open(path, encoding="utf-8") as handle:
            yield from handle
    except OSError as exc:
        raise GraphParseError(f"cannot read {path}: {exc.strerror}") from None


# tables

def cell_status(cell: GalleryCell) -> str:
    if cell.match:
        return "ok"
    return "known discrepancy" if cell.discrepancy else "MISMATCH"


def gallery_rows(cells: List[GalleryCell]) -> List[List[str]]:
    return [[c.fixture, c.key, c.expected, c.computed, cell_status(c)] for c in cells]


GALLERY_HEADERS = ["fixture", "key", "expected", "computed", "status"]


def summary_rows(summary: VerifySummary) -> List[List[str]]:
    rows = []
    for t in summary.tallies:
        first = "" if t.first_failure is None else f"{t.first_failure} ({t.first_failure_witness})"
        rows.append([t.name, str(t.passed), str(t.failed), str(t.not_applicable), str(t.sampled), first])
    return rows


SUMMARY_HEADERS = ["check", "pass", "fail", "n/a", "sampled", "first failure"]


def report_line(report: KEReport) -> str:
    """One text line per report, so text output streams like the other formats."""
    f = report.formulas
    parts = [
        report.graph6,
        f"n={report.n}", f"m={report.m}", f"class={report.ke_class.kind.value}",
        f"alpha={report.alpha}", f"mu={report.mu}", f"d={report.d}",
        f"xi={report.xi}", f"eps={report.epsilon}", f"eta={report.eta}",
        f"rho_v={report.rho_v}", f"rho_e={report.rho_e}",
    ]
    if f.rho_v_formula is not None:
        parts.append(f"formula={f.rho_v_formula}({'ok' if f.rho_v_equality else 'FAIL'})")
        parts.append(f"bound={f.rho_e_bound}({'ok' if f.rho_e_lower_bound else 'FAIL'})")
    if report.open_problem_flags:
        parts.append("flags=" + ",".join(report.open_problem_flags))
    return "  ".join(parts)
