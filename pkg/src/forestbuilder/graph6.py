"""Short-form graph6 encoding (vertex counts 0..62).

Layout: one header byte (n + 63), then the upper triangle of the adjacency
matrix in column-major order (pairs (0,1), (0,2), (1,2), (0,3), ...) packed
into 6-bit groups, each group offset by 63.  The final group is zero-padded.
"""

from __future__ import annotations

from .errors import MalformedGraph6, UnsupportedSize
from .graphs import Graph

_MAX_N = 62


def serialize_graph6(g: Graph) -> str:
    if g.n > _MAX_N:
        raise UnsupportedSize(f"graph6 short form caps at {_MAX_N} vertices")
    adjacency = g.adjacency_masks()
    out = [chr(g.n + 63)]
    group = 0
    filled = 0
    for j in range(1, g.n):
        col = adjacency[j]
        for i in range(j):
            group = (group << 1) | ((col >> i) & 1)
            filled += 1
            if filled == 6:
                out.append(chr(group + 63))
                group = 0
                filled = 0
    if filled:
        out.append(chr((group << (6 - filled)) + 63))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if not s:
        raise MalformedGraph6("empty graph6 string")
    codes = [ord(c) for c in s]
    if codes[0] == 126:
        raise UnsupportedSize("long-form graph6 (>= 63 vertices) not supported")
    if not 63 <= codes[0] <= 63 + _MAX_N:
        raise MalformedGraph6(f"bad header byte {codes[0]}")
    n = codes[0] - 63
    body = codes[1:]
    nbits = n * (n - 1) // 2
    expected = (nbits + 5) // 6
    if len(body) != expected:
        raise MalformedGraph6(
            f"{n}-vertex graph6 needs {expected} body bytes, got {len(body)}"
        )
    for c in body:
        if not 63 <= c <= 126:
            raise MalformedGraph6(f"body byte {c} outside graph6 range")
    bits = []
    for c in body:
        group = c - 63
        bits.extend((group >> shift) & 1 for shift in range(5, -1, -1))
    if any(bits[nbits:]):
        raise MalformedGraph6("nonzero padding bits")
    edges = []
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if bits[pos]:
                edges.append((i, j))
            pos += 1
    return Graph(n, tuple(edges))
