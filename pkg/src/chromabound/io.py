"""graph6 and edge-list serialization.

graph6 follows the nauty format description: a size header followed by the
upper triangle of the adjacency matrix, column by column, packed six bits per
printable byte (value + 63). An optional ``>>graph6<<`` prefix is accepted.

Edge lists are whitespace-separated 0-based pairs, one per line. Blank lines
and ``#`` comments are ignored, except that a ``# n=<count>`` comment fixes the
vertex count (otherwise it is one more than the largest index seen).
"""

from __future__ import annotations

import re
from typing import Literal

from .errors import GraphError, ParseError
from .graph import Graph

Format = Literal["graph6", "edge-list"]

_HEADER = b">>graph6<<"


def _encode_n(n: int) -> bytes:
    if n < 63:
        return bytes([n + 63])
    if n < 258048:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    if n < 68719476736:
        return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])
    raise GraphError(f"graph too large for graph6: n={n}")


def to_graph6(g: Graph) -> bytes:
    out = bytearray(_encode_n(g.n))
    bits = []
    for v in range(1, g.n):
        nb = g.neighbours[v]
        for u in range(v):
            bits.append(1 if u in nb else 0)
    bits.extend([0] * (-len(bits) % 6))
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        out.append(val + 63)
    return bytes(out)


def from_graph6(data: bytes | str) -> Graph:
    if isinstance(data, str):
        data = data.encode("ascii", errors="replace")
    data = data.strip()
    start = len(_HEADER) if data.startswith(_HEADER) else 0
    for pos in range(start, len(data)):
        if not 63 <= data[pos] <= 126:
            raise ParseError(f"illegal graph6 character {data[pos:pos + 1]!r}", pos)
    pos = start
    if pos >= len(data):
        raise ParseError("missing graph6 size header", pos)

    def take(count: int) -> int:
        nonlocal pos
        if pos + count > len(data):
            raise ParseError("truncated graph6 size header", len(data))
        val = 0
        for b in data[pos:pos + count]:
            val = (val << 6) | (b - 63)
        pos += count
        return val

    if data[pos] != 126:
        n = take(1)
    else:
        pos += 1
        if pos < len(data) and data[pos] == 126:
            pos += 1
            n = take(6)
        else:
            n = take(3)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = data[pos:]
    if len(body) != nbytes:
        where = pos + min(len(body), nbytes)
        raise ParseError(f"graph6 body has {len(body)} bytes, expected {nbytes} for n={n}", where)
    edges = []
    k = 0
    for v in range(1, n):
        for u in range(v):
            byte = body[k // 6] - 63
            if (byte >> (5 - k % 6)) & 1:
                edges.append((u, v))
            k += 1
    if nbytes and (body[-1] - 63) & ((1 << (nbytes * 6 - nbits)) - 1):
        raise ParseError("non-zero graph6 padding bits", pos + nbytes - 1)
    return Graph.from_edges(n, edges)


_N_COMMENT = re.compile(rb"#\s*n\s*=\s*(\d+)")


def from_edge_list(data: bytes | str) -> Graph:
    if isinstance(data, str):
        data = data.encode()
    n_declared = None
    pairs = []
    offset = 0
    for line in data.splitlines(keepends=True):
        body, _, comment = line.partition(b"#")
        if comment:
            hit = _N_COMMENT.match(b"#" + comment)
            if hit:
                n_declared = int(hit.group(1))
        tokens = [(m.start(), m.group()) for m in re.finditer(rb"\S+", body)]
        if tokens:
            if len(tokens) != 2:
                raise ParseError(f"expected two vertex indices per line, got {len(tokens)}", offset + tokens[0][0])
            ends = []
            for col, tok in tokens:
                if not tok.isdigit():
                    raise ParseError(f"invalid vertex index {tok.decode(errors='replace')!r}", offset + col)
                ends.append(int(tok))
            if ends[0] == ends[1]:
                raise ParseError(f"self-loop at vertex {ends[0]}", offset + tokens[0][0])
            pairs.append((ends, offset + tokens[0][0]))
        offset += len(line)
    n = max((max(e) for e, _ in pairs), default=-1) + 1
    if n_declared is not None:
        for ends, where in pairs:
            if max(ends) >= n_declared:
                raise ParseError(f"vertex index {max(ends)} out of range for n={n_declared}", where)
        n = n_declared
    try:
        return Graph.from_edges(n, (e for e, _ in pairs))
    except GraphError as exc:
        raise ParseError(str(exc), 0) from None


def to_edge_list(g: Graph) -> bytes:
    lines = [f"# n={g.n}"] + [f"{u} {v}" for u, v in g.edges]
    return ("\n".join(lines) + "\n").encode()


def parse_graph(data: bytes | str, format: Format = "graph6") -> Graph:
    if format == "graph6":
        return from_graph6(data)
    if format == "edge-list":
        return from_edge_list(data)
    raise ValueError(f"unknown graph format {format!r}")


def write_graph(g: Graph, format: Format = "graph6") -> bytes:
    if format == "graph6":
        return to_graph6(g)
    if format == "edge-list":
        return to_edge_list(g)
    raise ValueError(f"unknown graph format {format!r}")
