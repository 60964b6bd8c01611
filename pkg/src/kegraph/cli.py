import argparse
import sys
from typing import List, Optional, TextIO

from dotenv import load_dotenv

load_dotenv()

from kegraph import __version__
from kegraph.config import OUTPUT_FORMATS, SEARCH_DEPTHS, RunConfig, default_budget, default_jobs, env_value_is_valid
from kegraph.errors import BudgetExceeded, DomainError, GraphParseError
from kegraph.formats import encode_graph6
from kegraph.gallery import gallery_cells, gallery_fixture, mismatches
from kegraph.generators import FAMILIES, generate
from kegraph.runner import (
    GALLERY_HEADERS,
    SUMMARY_HEADERS,
    analyze_stream,
    atlas_census,
    census_graphs,
    gallery_rows,
    random_ke_graphs,
    read_census,
    report_line,
    summary_rows,
    verify_gallery,
    verify_graphs,
)
from kegraph.schemas import ErrorRecord, KEReport, VerifySummary
from kegraph.utils.logger import Logger
from kegraph.utils.ui import format_table

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def _positive_int(raw: str) -> int:
    try:
        value = int(raw)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {raw!r}") from None
    if value <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _non_negative_int(raw: str) -> int:
    try:
        value = int(raw)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {raw!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {value}")
    return value


def _add_run_options(p: argparse.ArgumentParser, formats=OUTPUT_FORMATS):
    p.add_argument("--format", dest="output_format", choices=formats, default="text")
    p.add_argument("--budget", type=_positive_int, default=None,
                   help="search nodes allowed per graph (default: KEGRAPH_BUDGET or 10,000,000)")
    p.add_argument("--jobs", type=_positive_int, default=None, help="worker processes (default: KEGRAPH_JOBS or 1)")
    p.add_argument("--strict", action="store_true", help="stop with exit code 3 when a graph runs out of budget")
    p.add_argument("--depth", choices=sorted(SEARCH_DEPTHS), default="standard",
                   help="size limits of the exhaustive cross-checks")
    p.add_argument("--seed", type=int, default=0)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kegraph", description="König-Egerváry graph analysis and theorem verification.")
    parser.add_argument("--version", action="version", version=f"kegraph {__version__}")
    parser.add_argument("--quiet", action="store_true", help="suppress informational messages on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    analyze = sub.add_parser("analyze", help="report the invariants of every graph in a file")
    _add_run_options(analyze)
    analyze.add_argument("input", help="graph6, DIMACS or edge-list file; '-' reads standard input")

    verify = sub.add_parser("verify", help="run the theorem suite over a graph population")
    _add_run_options(verify, formats=("text", "json"))
    source = verify.add_mutually_exclusive_group(required=True)
    source.add_argument("--gallery", action="store_true", help="the bundled gallery, plus its stated values")
    source.add_argument("--census", metavar="FILE", help="graph6 census file; '-' reads standard input")
    source.add_argument("--atlas", metavar="N", type=_non_negative_int,
                        help="every graph on at most N vertices (N <= 7) from the networkx atlas")
    source.add_argument("--random", nargs=4, metavar=("ke", "S", "A", "P"), help="seeded random KE graphs")
    verify.add_argument("--count", type=_non_negative_int, default=1, help="graphs drawn by --random")

    gen = sub.add_parser("gen", help="print graph6 lines of a generated family")
    gen.add_argument("family", help=f"one of {', '.join(sorted(FAMILIES))} or gallery:<name>")
    gen.add_argument("params", nargs="*")
    gen.add_argument("--count", type=_non_negative_int, default=1)
    gen.add_argument("--seed", type=int, default=0)

    gallery = sub.add_parser("gallery", help="compare the gallery's stated values with computation")
    gallery.add_argument("--format", dest="output_format", choices=("text", "json"), default="text")
    gallery.add_argument("--depth", choices=sorted(SEARCH_DEPTHS), default="standard")
    return parser


def _run_config(args: argparse.Namespace, source: str, logger: Logger) -> RunConfig:
    for name in ("KEGRAPH_BUDGET", "KEGRAPH_JOBS"):
        if not env_value_is_valid(name):
            logger.warning(f"{name} is not a positive integer; using the built-in default")
    return RunConfig(
        command=args.command,
        source=source,
        seed=args.seed,
        count=getattr(args, "count", 1),
        budget=args.budget or default_budget(),
        output_format=args.output_format,
        jobs=args.jobs or default_jobs(),
        strict=args.strict,
        depth=args.depth,
    )


def cmd_analyze(args: argparse.Namespace, logger: Logger, out: TextIO) -> int:
    config = _run_config(args, args.input, logger)
    parse_errors = 0
    if config.output_format == "csv":
        out.write(",".join(KEReport.csv_header()) + "\n")
    lines = read_census(config.source)
    for result in analyze_stream(lines, config, on_warning=logger.warning):
        if isinstance(result, ErrorRecord):
            if result.kind == "parse":
                parse_errors += 1
            where = f"line {result.line}" if result.line is not None else f"graph {result.index}"
            logger.error(f"{where}: {result.error}")
            if config.output_format == "json":
                out.write(result.model_dump_json() + "\n")
            continue
        if config.output_format == "json":
            out.write(result.model_dump_json() + "\n")
        elif config.output_format == "csv":
            out.write(",".join(result.csv_row()) + "\n")
        else:
            out.write(report_line(result) + "\n")
        out.flush()
    return EXIT_USAGE if parse_errors else EXIT_OK


def _write_summary(summary: VerifySummary, out: TextIO):
    for line in format_table(SUMMARY_HEADERS, summary_rows(summary)):
        out.write(line + "\n")
    out.write(f"\ngraphs: {summary.graphs}  KE: {summary.ke_graphs}  budget errors: {summary.errors}\n")
    if summary.greedy_compared:
        out.write(f"greedy critical set was maximum on {summary.greedy_maximum} of {summary.greedy_compared} graphs\n")
    for flag, count in sorted(summary.open_problem_counts.items()):
        examples = " ".join(summary.open_problem_examples.get(flag, []))
        out.write(f"non-KE graphs with {flag}: {count}  e.g. {examples}\n")


def cmd_verify(args: argparse.Namespace, logger: Logger, out: TextIO) -> int:
    cells = []

    def on_error(graph6: str, message: str):
        logger.warning(f"{graph6}: {message}")

    if args.gallery:
        config = _run_config(args, "gallery", logger)
        with logger.progress("Verifying the gallery...", "Gallery verified"):
            summary, cells = verify_gallery(config, on_error)
    else:
        if args.census is not None:
            config = _run_config(args, args.census, logger)
            graphs = census_graphs(read_census(args.census))
        elif args.atlas is not None:
            config = _run_config(args, f"atlas:{args.atlas}", logger)
            graphs = atlas_census(args.atlas)
        else:
            family, s, a, p = args.random
            if family != "ke":
                raise DomainError(f"--random supports only the 'ke' family, got {family!r}")
            try:
                s, a, p = int(s), int(a), float(p)
            except ValueError:
                raise DomainError("usage: --random ke <s> <a> <p>") from None
            config = _run_config(args, f"random:ke {s} {a} {p}", logger)
            graphs = random_ke_graphs(s, a, p, config.count, config.seed)
        with logger.progress(f"Verifying {config.source}...", f"Verified {config.source}"):
            summary = verify_graphs(graphs, config.source, config, on_error)

    if config.output_format == "json":
        out.write(summary.model_dump_json() + "\n")
    else:
        logger.log_header(f"Theorem suite over {summary.source}")
        _write_summary(summary, out)
        if cells:
            bad = mismatches(cells)
            out.write(f"gallery: {len(cells)} values compared, {len(bad)} mismatches\n")
            if bad:
                for line in format_table(GALLERY_HEADERS, gallery_rows(bad)):
                    out.write(line + "\n")
    if summary.failed:
        logger.error("verification failed")
        return EXIT_VERIFY_FAILED
    return EXIT_OK


def cmd_gen(args: argparse.Namespace, logger: Logger, out: TextIO) -> int:
    if args.family.startswith("gallery:"):
        if args.params:
            raise DomainError("gallery:<name> takes no parameters")
        graphs = [gallery_fixture(args.family.split(":", 1)[1]).graph] * args.count
    else:
        graphs = generate(args.family, args.params, args.count, args.seed)
    for g in graphs:
        out.write(encode_graph6(g) + "\n")
    return EXIT_OK


def cmd_gallery(args: argparse.Namespace, logger: Logger, out: TextIO) -> int:
    config = RunConfig(command="gallery", output_format=args.output_format, depth=args.depth)
    cells = gallery_cells(limits=config.limits)
    if config.output_format == "json":
        for cell in cells:
            out.write(cell.model_dump_json() + "\n")
    else:
        for line in format_table(GALLERY_HEADERS, gallery_rows(cells)):
            out.write(line + "\n")
    flagged = [c for c in cells if c.discrepancy and not c.match]
    for cell in flagged:
        logger.info(f"{cell.fixture}: stated {cell.key} = {cell.expected}, computed {cell.computed} (known discrepancy)")
    bad = mismatches(cells)
    if bad:
        logger.error(f"{len(bad)} gallery value(s) disagree with computation")
        return EXIT_VERIFY_FAILED
    return EXIT_OK


COMMANDS = {
    "analyze": cmd_analyze,
    "verify": cmd_verify,
    "gen": cmd_gen,
    "gallery": cmd_gallery,
}


def main(argv: Optional[List[str]] = None, out: Optional[TextIO] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logger = Logger(quiet=args.quiet)
    out = out or sys.stdout
    try:
        return COMMANDS[args.command](args, logger, out)
    except BudgetExceeded as e:
        logger.error(str(e))
        return EXIT_BUDGET
    except (GraphParseError, DomainError) as e:
        logger.error(str(e))
        return EXIT_USAGE
    except KeyboardInterrupt:
        logger.error("interrupted")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
