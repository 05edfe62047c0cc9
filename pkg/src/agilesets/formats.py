"""graph6 and JSON encodings for graphs and minor models.

graph6 follows the format description shipped with nauty (``formats.txt``):
a size header N(n) followed by the upper triangle of the adjacency matrix in
column order, packed six bits per byte with 63 added to each byte.
"""

from __future__ import annotations

import json
from typing import Any

from .graph import Graph

HEADER = b">>graph6<<"


class Graph6Error(ValueError):
    """Malformed graph6 input; ``offset`` is the byte position of the problem."""

    def __init__(self, message: str, offset: int) -> None:
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


def _encode_size(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return b"~" + bytes(((n >> s) & 63) + 63 for s in (12, 6, 0))
    if n <= 68719476735:
        return b"~~" + bytes(((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0))
    raise ValueError(f"graph6 cannot encode {n} vertices")


def serialize_graph6(g: Graph) -> bytes:
    out = bytearray(_encode_size(g.n))
    adj = g.adj
    acc = 0
    nbits = 0
    for j in range(1, g.n):
        row = adj[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return bytes(out)


def _decode_size(data: bytes) -> tuple[int, int]:
    if not data:
        raise Graph6Error("empty input", 0)

    def sixes(start: int, count: int) -> int:
        if len(data) < start + count:
            raise Graph6Error("truncated size header", len(data))
        v = 0
        for k in range(start, start + count):
            c = data[k]
            if not 63 <= c <= 126:
                raise Graph6Error(f"byte {c!r} outside 63..126", k)
            v = (v << 6) | (c - 63)
        return v

    if data[0] != 126:
        return sixes(0, 1), 1
    if len(data) > 1 and data[1] == 126:
        return sixes(2, 6), 8
    return sixes(1, 3), 4


def parse_graph6(data: bytes | str) -> Graph:
    if isinstance(data, str):
        data = data.encode("ascii")
    data = data.strip()
    if data.startswith(HEADER):
        data = data[len(HEADER):]
    if data[:1] in (b":", b"&", b";"):
        raise Graph6Error("sparse6/digraph6 input is not graph6", 0)
    n, pos = _decode_size(data)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[pos:]
    if len(body) < need:
        raise Graph6Error(f"truncated: expected {need} adjacency bytes, got {len(body)}", len(data))
    if len(body) > need:
        raise Graph6Error("trailing bytes after adjacency data", pos + need)
    edges = set()
    k = 0
    for b_off, c in enumerate(body):
        if not 63 <= c <= 126:
            raise Graph6Error(f"byte {c!r} outside 63..126", pos + b_off)
    bitstream = 0
    for c in body:
        bitstream = (bitstream << 6) | (c - 63)
    total = 6 * need
    pad = total - nbits
    if pad and bitstream & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits", len(data) - 1)
    for j in range(1, n):
        for i in range(j):
            if bitstream >> (total - 1 - k) & 1:
                edges.add((i, j))
            k += 1
    return Graph(n, frozenset(edges))


# -- JSON -------------------------------------------------------------------


def graph_to_dict(g: Graph) -> dict[str, Any]:
    return {"n": g.n, "edges": [list(e) for e in g.edge_list()]}


def graph_from_dict(d: dict[str, Any]) -> Graph:
    try:
        return Graph.from_edges(int(d["n"]), (tuple(e) for e in d["edges"]))
    except (KeyError, TypeError) as exc:
        raise ValueError(f"not a graph object: {exc}") from exc


def graph_to_json(g: Graph) -> str:
    return json.dumps(graph_to_dict(g), separators=(", ", ": "))


def graph_from_json(text: str) -> Graph:
    return graph_from_dict(json.loads(text))


def read_graph(text: str | bytes) -> Graph:
    """Parse either encoding, sniffing JSON by its opening brace."""
    if isinstance(text, bytes):
        text = text.decode("ascii")
    stripped = text.strip()
    if stripped.startswith("{"):
        return graph_from_json(stripped)
    lines = [ln for ln in stripped.splitlines() if ln.strip()]
    if len(lines) != 1:
        raise Graph6Error("expected exactly one graph6 line", 0)
    return parse_graph6(lines[0])
