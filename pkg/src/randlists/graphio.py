"""Graph input/output: edge-list files and the graph6 encoding.

Edge-list format: first line ``p <n> <edge-count>``, then one line
``e <u> <v>`` per edge with 0-based endpoints. Lines starting with ``c``
and blank lines are ignored.

graph6 is the standard 6-bit ASCII encoding used by isomorph-free
enumeration tools; streams carry one graph per line.
"""

from __future__ import annotations

from typing import IO, Iterable, Iterator

from .errors import GraphParseError
from .graphs import Graph

_G6_HEADER = ">>graph6<<"


def parse_edge_list(text: str) -> Graph:
    n = -1
    declared_edges = -1
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n >= 0:
                raise GraphParseError(f"line {lineno}: duplicate 'p' line")
            if len(parts) != 3:
                raise GraphParseError(f"line {lineno}: expected 'p <n> <edges>'")
            try:
                n, declared_edges = int(parts[1]), int(parts[2])
            except ValueError as exc:
                raise GraphParseError(f"line {lineno}: {exc}") from exc
        elif parts[0] == "e":
            if n < 0:
                raise GraphParseError(f"line {lineno}: 'e' before 'p'")
            if len(parts) != 3:
                raise GraphParseError(f"line {lineno}: expected 'e <u> <v>'")
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError as exc:
                raise GraphParseError(f"line {lineno}: {exc}") from exc
            edges.append((u, v))
        else:
            raise GraphParseError(f"line {lineno}: unknown record {parts[0]!r}")
    if n < 0:
        raise GraphParseError("missing 'p' line")
    if declared_edges != len(edges):
        raise GraphParseError(
            f"declared {declared_edges} edges but found {len(edges)}"
        )
    try:
        return Graph(n, edges)
    except ValueError as exc:
        raise GraphParseError(str(exc)) from exc


def load_edge_list(path: str) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def write_edge_list(g: Graph) -> str:
    lines = [f"p {g.n} {g.num_edges()}"]
    lines.extend(f"e {u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def _g6_read_n(data: str) -> tuple[int, int]:
    """Decode the vertex count; return (n, index of first adjacency byte)."""
    if not data:
        raise GraphParseError("empty graph6 line")
    c0 = ord(data[0]) - 63
    if c0 < 0:
        raise GraphParseError(f"bad graph6 byte {data[0]!r}")
    if c0 < 63:
        return c0, 1
    if len(data) >= 4 and data[1] != "~":
        n = 0
        for ch in data[1:4]:
            n = (n << 6) | (ord(ch) - 63)
        return n, 4
    raise GraphParseError("graph6 graphs beyond 258047 vertices not supported")


def parse_graph6(line: str) -> Graph:
    """Decode one graph6 line (optionally prefixed with the format header)."""
    data = line.strip()
    if data.startswith(_G6_HEADER):
        data = data[len(_G6_HEADER):]
    n, pos = _g6_read_n(data)
    need_bits = n * (n - 1) // 2
    need_bytes = (need_bits + 5) // 6
    body = data[pos:]
    if len(body) != need_bytes:
        raise GraphParseError(
            f"graph6 body length {len(body)} != expected {need_bytes} for n={n}"
        )
    bits = 0
    for ch in body:
        val = ord(ch) - 63
        if not 0 <= val < 64:
            raise GraphParseError(f"bad graph6 byte {ch!r}")
        bits = (bits << 6) | val
    bits >>= 6 * need_bytes - need_bits  # drop padding
    edges = []
    idx = need_bits - 1
    for v in range(1, n):
        for u in range(v):
            if idx >= 0 and (bits >> idx) & 1:
                edges.append((u, v))
            idx -= 1
    return Graph(n, edges)


def to_graph6(g: Graph) -> str:
    """Encode a graph as a graph6 string (no header, no newline)."""
    n = g.n
    if n < 63:
        head = chr(n + 63)
    elif n <= 258047:
        head = "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    else:
        raise GraphParseError("graph6 encoding beyond 258047 vertices not supported")
    bits = []
    for v in range(1, n):
        for u in range(v):
            bits.append(1 if g.has_edge(u, v) else 0)
    while len(bits) % 6:
        bits.append(0)
    body = []
    for i in range(0, len(bits), 6):
        val = 0
        for b in bits[i : i + 6]:
            val = (val << 1) | b
        body.append(chr(val + 63))
    return head + "".join(body)


def iter_graph6(lines: Iterable[str]) -> Iterator[tuple[str, Graph]]:
    """Yield (graph6 string, Graph) for each non-blank line of a stream."""
    for raw in lines:
        line = raw.strip()
        if not line:
            continue
        if line.startswith(_G6_HEADER):
            line = line[len(_G6_HEADER):]
            if not line:
                continue
        yield line, parse_graph6(line)


def load_graph6_file(path_or_stream: str | IO[str]) -> Iterator[tuple[str, Graph]]:
    if isinstance(path_or_stream, str):
        with open(path_or_stream, "r", encoding="ascii") as fh:
            yield from iter_graph6(fh)
    else:
        yield from iter_graph6(path_or_stream)
