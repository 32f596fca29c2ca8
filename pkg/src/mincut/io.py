"""Edge-list and DIMACS readers/writers.

Edge-list: one ``u v`` pair per line, ``#`` comments and blank lines ignored.
Labels are remapped to dense ids in ascending numeric order and kept in
``graph.labels``.

DIMACS: ``p edge <n> <m>`` header, ``e <u> <v>`` edges with 1-based ids,
``c`` comment lines.
"""

from __future__ import annotations

from .errors import EmptyGraph, FormatMismatch, ParseError
from .graph import SimpleGraph, build_simple_graph

FORMATS = ("edgelist", "dimacs")


def _text(data) -> str:
    if isinstance(data, (bytes, bytearray)):
        try:
            return data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(1, f"not valid UTF-8 ({exc.reason})") from None
    return data


def _nonneg_int(token: str, line_no: int) -> int:
    try:
        value = int(token)
    except ValueError:
        raise ParseError(line_no, f"expected an integer, got {token!r}") from None
    if value < 0:
        raise ParseError(line_no, f"negative vertex label {value}")
    return value


def parse_edgelist(text: str, strict: bool = True) -> SimpleGraph:
    pairs = []
    for line_no, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if tokens[0] in ("p", "e", "c") and not pairs:
            raise FormatMismatch(f"line {line_no} looks like DIMACS, not an edge list")
        if len(tokens) != 2:
            raise ParseError(line_no, f"expected two vertex labels, got {len(tokens)} fields")
        pairs.append((_nonneg_int(tokens[0], line_no), _nonneg_int(tokens[1], line_no)))
    if not pairs:
        raise EmptyGraph("edge list contains no edges")
    labels = sorted({x for pair in pairs for x in pair})
    dense = {label: i for i, label in enumerate(labels)}
    return build_simple_graph(((dense[u], dense[v]) for u, v in pairs), strict=strict,
                              n=len(labels), labels=labels)


def parse_dimacs(text: str, strict: bool = True) -> SimpleGraph:
    n = m = None
    header_line = 0
    pairs = []
    for line_no, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line[0] == "c":
            continue
        tokens = line.split()
        kind = tokens[0]
        if kind == "p":
            if n is not None:
                raise ParseError(line_no, "duplicate problem line")
            if len(tokens) != 4 or tokens[1] != "edge":
                raise ParseError(line_no, "expected 'p edge <n> <m>'")
            n = _nonneg_int(tokens[2], line_no)
            m = _nonneg_int(tokens[3], line_no)
            header_line = line_no
        elif kind == "e":
            if n is None:
                raise ParseError(line_no, "edge before problem line")
            if len(tokens) != 3:
                raise ParseError(line_no, "expected 'e <u> <v>'")
            u = _nonneg_int(tokens[1], line_no)
            v = _nonneg_int(tokens[2], line_no)
            if not (1 <= u <= n and 1 <= v <= n):
                raise ParseError(line_no, f"vertex id outside 1..{n}")
            pairs.append((u - 1, v - 1))
        elif n is None and len(tokens) == 2 and all(t.isdigit() for t in tokens):
            raise FormatMismatch(f"line {line_no} looks like an edge list, not DIMACS")
        else:
            raise ParseError(line_no, f"unknown line type {kind!r}")
    if n is None:
        raise FormatMismatch("no 'p edge' problem line found")
    if len(pairs) != m:
        raise ParseError(header_line, f"header declares {m} edges, found {len(pairs)}")
    return build_simple_graph(pairs, strict=strict, n=n, labels=range(1, n + 1))


def parse_graph(data, format: str = "edgelist", strict: bool = True) -> SimpleGraph:
    """Parse ``bytes`` or ``str`` in the given format."""
    text = _text(data)
    if format == "edgelist":
        return parse_edgelist(text, strict)
    if format == "dimacs":
        return parse_dimacs(text, strict)
    raise ValueError(f"unknown format {format!r}; expected one of {FORMATS}")


def serialize_graph(G: SimpleGraph, format: str = "edgelist") -> str:
    """Write ``G`` using dense ids, edges as ``u < v`` in lexicographic order.

    Edge lists cannot represent isolated vertices, so the round trip is only
    exact for edge lists when every vertex has an edge; DIMACS keeps ``n``.
    """
    if format == "edgelist":
        return "".join(f"{u} {v}\n" for u, v in G.edges())
    if format == "dimacs":
        body = "".join(f"e {u + 1} {v + 1}\n" for u, v in G.edges())
        return f"p edge {G.n} {G.m}\n" + body
    raise ValueError(f"unknown format {format!r}; expected one of {FORMATS}")
