"""
Readers and writers for graph interchange formats.

- graph6: one graph per line, bit-exact with the public format description.
  The short form covers n <= 62; the long forms ('~' plus 18 bits, '~~' plus
  36 bits) are read and written as well.
- Plain edge lists: a header "n m" followed by 0-indexed "u v" lines.
- DIMACS: "c" comments, a "p edge n m" header and 1-indexed "e u v" lines.

`read_graphs` sniffs which of the three a stream holds.
"""

from dataclasses import dataclass, field
from typing import Iterable, Iterator, List, Optional, Tuple

from kegraph.errors import GraphParseError
from kegraph.graph import Graph, normalize_edge

GRAPH6_HEADER = ">>graph6<<"
_SHORT_LIMIT = 62
_MEDIUM_LIMIT = 258047


def _six_bit_groups(value: int, groups: int) -> List[int]:
    return [(value >> (6 * (groups - 1 - i))) & 0x3F for i in range(groups)]


def _encode_order(n: int) -> str:
    if n <= _SHORT_LIMIT:
        return chr(n + 63)
    if n <= _MEDIUM_LIMIT:
        return "~" + "".join(chr(b + 63) for b in _six_bit_groups(n, 3))
    return "~~" + "".join(chr(b + 63) for b in _six_bit_groups(n, 6))


def encode_graph6(g: Graph) -> str:
    """graph6 string of g, without header or newline."""
    out = [_encode_order(g.n)]
    acc = 0
    filled = 0
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | (1 if i in row else 0)
            filled += 1
            if filled == 6:
                out.append(chr(acc + 63))
                acc = 0
                filled = 0
    if filled:
        out.append(chr((acc << (6 - filled)) + 63))
    return "".join(out)


def _sextet(text: str, offset: int) -> int:
    if offset >= len(text):
        raise GraphParseError("unexpected end of graph6 data", offset=offset)
    code = ord(text[offset])
    if not 63 <= code <= 126:
        raise GraphParseError(f"byte {text[offset]!r} is outside the graph6 range 63..126", offset=offset)
    return code - 63


def _decode_order(text: str) -> Tuple[int, int]:
    """Return (n, offset of the first adjacency byte)."""
    if not text:
        raise GraphParseError("empty graph6 string", offset=0)
    if text[0] != "~":
        return _sextet(text, 0), 1
    if len(text) > 1 and text[1] == "~":
        n = 0
        for pos in range(2, 8):
            n = (n << 6) | _sextet(text, pos)
        return n, 8
    n = 0
    for pos in range(1, 4):
        n = (n << 6) | _sextet(text, pos)
    return n, 4


def parse_graph6(text: str) -> Graph:
    line = text.rstrip("\r\n")
    base = 0
    if line.startswith(GRAPH6_HEADER):
        line = line[len(GRAPH6_HEADER):]
        base = len(GRAPH6_HEADER)
    try:
        n, start = _decode_order(line)
    except GraphParseError as exc:
        raise GraphParseError(exc.reason, offset=base + (exc.offset or 0)) from None
    total_bits = n * (n - 1) // 2
    needed = (total_bits + 5) // 6
    available = len(line) - start
    if available < needed:
        raise GraphParseError(
            f"truncated adjacency data: {needed} bytes needed for n={n}, {available} present",
            offset=base + len(line),
        )
    if available > needed:
        raise GraphParseError("trailing characters after graph6 data", offset=base + start + needed)
    edges = []
    i, j = 0, 1
    for k in range(needed):
        pos = start + k
        try:
            value = _sextet(line, pos)
        except GraphParseError as exc:
            raise GraphParseError(exc.reason, offset=base + pos) from None
        for shift in range(5, -1, -1):
            index = 6 * k + (5 - shift)
            bit = (value >> shift) & 1
            if index >= total_bits:
                if bit:
                    raise GraphParseError("nonzero padding bits", offset=base + pos)
                continue
            if bit:
                edges.append((i, j))
            i += 1
            if i == j:
                i = 0
                j += 1
    return Graph.from_edges(n, edges)


@dataclass
class EdgeListResult:
    graph: Graph
    duplicates: int = 0
    warnings: List[str] = field(default_factory=list)


def _int_token(token: str, line_no: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise GraphParseError(f"expected an integer, found {token!r}", line=line_no) from None


def _is_dimacs(lines: List[str]) -> bool:
    for raw in lines:
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        head = stripped.split()[0]
        return head in ("c", "p")
    return False


def read_edge_list(text: str) -> EdgeListResult:
    """Parse a plain or DIMACS edge list, keeping the warnings produced on the way."""
    lines = text.splitlines()
    dimacs = _is_dimacs(lines)
    n: Optional[int] = None
    declared = 0
    seen = set()
    order: List[Tuple[int, int]] = []
    duplicates = 0
    warnings: List[str] = []
    for line_no, raw in enumerate(lines, start=1):
        tokens = raw.split()
        if not tokens or tokens[0].startswith("#"):
            continue
        if dimacs:
            kind = tokens[0]
            if kind == "c":
                continue
            if kind == "p":
                if n is not None:
                    raise GraphParseError("second problem line", line=line_no)
                if len(tokens) != 4 or tokens[1] not in ("edge", "col"):
                    raise GraphParseError("expected 'p edge <n> <m>'", line=line_no)
                n = _int_token(tokens[2], line_no)
                declared = _int_token(tokens[3], line_no)
                continue
            if kind != "e":
                raise GraphParseError(f"unknown DIMACS line type {kind!r}", line=line_no)
            if n is None:
                raise GraphParseError("edge line before the problem line", line=line_no)
            if len(tokens) != 3:
                raise GraphParseError("expected 'e <u> <v>'", line=line_no)
            u = _int_token(tokens[1], line_no) - 1
            v = _int_token(tokens[2], line_no) - 1
        else:
            if n is None:
                if len(tokens) != 2:
                    raise GraphParseError("expected header '<n> <m>'", line=line_no)
                n = _int_token(tokens[0], line_no)
                declared = _int_token(tokens[1], line_no)
                if n < 0 or declared < 0:
                    raise GraphParseError("negative count in header", line=line_no)
                continue
            if len(tokens) != 2:
                raise GraphParseError("expected '<u> <v>'", line=line_no)
            u = _int_token(tokens[0], line_no)
            v = _int_token(tokens[1], line_no)
        if u == v:
            raise GraphParseError(f"loop at vertex {u}", line=line_no)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphParseError(f"vertex index out of range for n={n}", line=line_no)
        edge = normalize_edge(u, v)
        if edge in seen:
            duplicates += 1
            continue
        seen.add(edge)
        order.append(edge)
    if n is None:
        raise GraphParseError("missing header line", line=max(len(lines), 1))
    if duplicates:
        warnings.append(f"collapsed {duplicates} duplicate edge(s)")
    if declared != len(order) + duplicates:
        warnings.append(f"header declares {declared} edges, found {len(order) + duplicates}")
    return EdgeListResult(Graph.from_edges(n, order), duplicates, warnings)


def parse_edge_list(text: str) -> Graph:
    return read_edge_list(text).graph


def encode_edge_list(g: Graph) -> str:
    rows = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(rows) + "\n"


def encode_dimacs(g: Graph) -> str:
    rows = [f"p edge {g.n} {g.m}"] + [f"e {u + 1} {v + 1}" for u, v in g.edges()]
    return "\n".join(rows) + "\n"


@dataclass
class ParsedGraph:
    """One graph read from a stream, with where it came from."""
    index: int
    line: int
    graph: Optional[Graph] = None
    error: Optional[GraphParseError] = None
    warnings: List[str] = field(default_factory=list)


def sniff_format(first_line: str) -> str:
    tokens = first_line.split()
    if not tokens:
        return "graph6"
    if tokens[0] in ("c", "p") and (len(tokens) > 1 or tokens[0] == "c"):
        return "dimacs"
    if len(tokens) == 2 and all(t.lstrip("-").isdigit() for t in tokens):
        return "edgelist"
    return "graph6"


def _is_content(raw: str) -> bool:
    """Blank lines and "#" comment lines carry no graph in any of the formats."""
    stripped = raw.strip()
    return bool(stripped) and not stripped.startswith("#")


def read_graphs(lines: Iterable[str]) -> Iterator[ParsedGraph]:
    """Stream graphs out of text lines, detecting graph6, DIMACS or plain edge lists.

    graph6 input is processed one line at a time, so files of any length run
    in constant memory. Edge-list formats hold a single graph per stream.
    Malformed graph6 lines are yielded with their error set so that the
    caller decides whether to stop.
    """
    it = iter(lines)
    buffered: List[str] = []
    fmt = None
    for raw in it:
        buffered.append(raw)
        if _is_content(raw):
            fmt = sniff_format(raw.strip())
            break
    if fmt is None:
        return
    if fmt in ("dimacs", "edgelist"):
        text = "".join(buffered) + "".join(it)
        result = read_edge_list(text)
        yield ParsedGraph(index=0, line=1, graph=result.graph, warnings=result.warnings)
        return
    index = 0
    line_no = 0
    for chunk in (buffered, it):
        for raw in chunk:
            line_no += 1
            stripped = raw.strip()
            if not _is_content(raw):
                continue
            try:
                graph = parse_graph6(stripped)
            except GraphParseError as exc:
                exc.line = line_no
                yield ParsedGraph(index=index, line=line_no, error=exc)
            else:
                yield ParsedGraph(index=index, line=line_no, graph=graph)
            index += 1
