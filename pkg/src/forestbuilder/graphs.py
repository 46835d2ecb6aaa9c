"""Simple undirected graphs with an ordered edge list.

Vertices are integers 0..n-1.  Edges are unordered pairs, stored normalized
as (min, max); an edge's identity for process orderings is its index in the
edge tuple, so edge list order is preserved exactly as given at construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    DuplicateEdge,
    EmptyGraph,
    MalformedEdgeList,
    SelfLoop,
    SizeCapExceeded,
    VertexOutOfRange,
)

CHEEGER_VERTEX_CAP = 20


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph: vertex count plus normalized edge tuple."""

    n: int
    edges: tuple[tuple[int, int], ...]

    @property
    def m(self) -> int:
        return len(self.edges)

    def degrees(self) -> list[int]:
        degs = [0] * self.n
        for u, v in self.edges:
            degs[u] += 1
            degs[v] += 1
        return degs

    def adjacency_masks(self) -> list[int]:
        """Neighbor bitmask per vertex (bit v of masks[u] set iff uv is an edge)."""
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return masks

    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        if u > v:
            u, v = v, u
        return (u, v) in self.edge_set()

    def delete_edge(self, edge_id: int) -> "Graph":
        """Same vertex set, edge `edge_id` removed; later edges shift down."""
        if not 0 <= edge_id < self.m:
            raise IndexError(f"edge id {edge_id} out of range")
        return Graph(self.n, self.edges[:edge_id] + self.edges[edge_id + 1 :])

    def add_edge(self, u: int, v: int) -> "Graph":
        return from_edge_list(self.n, list(self.edges) + [(u, v)])

    def relabel(self, perm: list[int] | tuple[int, ...]) -> "Graph":
        """Apply vertex relabeling perm[old] = new, keeping edge list order."""
        edges = []
        for u, v in self.edges:
            a, b = perm[u], perm[v]
            edges.append((a, b) if a < b else (b, a))
        return Graph(self.n, tuple(edges))


def from_edge_list(n: int, pairs: list[tuple[int, int]]) -> Graph:
    """Validated constructor; raises on bad endpoints, loops, duplicates."""
    if n < 0:
        raise VertexOutOfRange("vertex count must be nonnegative")
    seen: set[tuple[int, int]] = set()
    edges = []
    for u, v in pairs:
        if not (0 <= u < n and 0 <= v < n):
            raise VertexOutOfRange(f"edge ({u},{v}) outside 0..{n - 1}")
        if u == v:
            raise SelfLoop(f"self-loop at vertex {u}")
        if u > v:
            u, v = v, u
        if (u, v) in seen:
            raise DuplicateEdge(f"edge ({u},{v}) repeated")
        seen.add((u, v))
        edges.append((u, v))
    return Graph(n, tuple(edges))


def parse_edge_list(text: str) -> Graph:
    """Parse the plain-text edge list format.

    First non-comment line is "n m"; then m lines "u v".  Blank lines and
    lines starting with '#' are ignored.
    """
    header: tuple[int, int] | None = None
    pairs: list[tuple[int, int]] = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if header is None:
            if len(fields) != 2:
                raise MalformedEdgeList('first line must be "n m"')
            header = (int(fields[0]), int(fields[1]))
            continue
        if len(fields) != 2:
            raise MalformedEdgeList(f"bad edge line: {line!r}")
        pairs.append((int(fields[0]), int(fields[1])))
    if header is None:
        raise MalformedEdgeList("empty edge list input")
    n, m = header
    if len(pairs) != m:
        raise MalformedEdgeList(f"header says {m} edges, found {len(pairs)}")
    return from_edge_list(n, pairs)


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    masks = g.adjacency_masks()
    seen = 1
    stack = [0]
    while stack:
        u = stack.pop()
        rest = masks[u] & ~seen
        while rest:
            low = rest & -rest
            rest ^= low
            v = low.bit_length() - 1
            seen |= low
            stack.append(v)
    return seen == (1 << g.n) - 1


def components(g: Graph) -> tuple[list[tuple[Graph, tuple[int, ...]]], int]:
    """Split into edge-bearing connected components plus an isolated count.

    Returns ([(subgraph, vertex_map), ...], isolated_vertices) where
    vertex_map[i] is the original label of the subgraph's vertex i.  Each
    subgraph keeps its edges in the original relative order.
    """
    masks = g.adjacency_masks()
    comp_id = [-1] * g.n
    comps: list[list[int]] = []
    for start in range(g.n):
        if comp_id[start] >= 0:
            continue
        cid = len(comps)
        members = [start]
        comp_id[start] = cid
        stack = [start]
        while stack:
            u = stack.pop()
            rest = masks[u]
            while rest:
                low = rest & -rest
                rest ^= low
                v = low.bit_length() - 1
                if comp_id[v] < 0:
                    comp_id[v] = cid
                    members.append(v)
                    stack.append(v)
        comps.append(sorted(members))

    pieces: list[tuple[Graph, tuple[int, ...]]] = []
    isolated = 0
    comp_edges: dict[int, list[tuple[int, int]]] = {}
    for u, v in g.edges:
        comp_edges.setdefault(comp_id[u], []).append((u, v))
    for cid, members in enumerate(comps):
        if cid not in comp_edges:
            isolated += 1
            continue
        index = {old: new for new, old in enumerate(members)}
        edges = tuple((index[u], index[v]) for u, v in comp_edges[cid])
        pieces.append((Graph(len(members), edges), tuple(members)))
    return pieces, isolated


def _reachable(masks: list[int], start: int, n: int) -> int:
    seen = 1 << start
    stack = [start]
    while stack:
        u = stack.pop()
        rest = masks[u] & ~seen
        while rest:
            low = rest & -rest
            rest ^= low
            seen |= low
            stack.append(low.bit_length() - 1)
    return seen


def large_bridges(g: Graph) -> set[int]:
    """Edge ids whose removal splits off two sides each containing an edge.

    A bridge with a pendant side (all the side's vertices meet no other
    edge) does not count: only cuts leaving at least one edge on both sides.
    """
    result: set[int] = set()
    for eid, (u, v) in enumerate(g.edges):
        rest = g.delete_edge(eid)
        masks = rest.adjacency_masks()
        side_u = _reachable(masks, u, rest.n)
        if (side_u >> v) & 1:
            continue  # not a bridge
        edges_u = sum(1 for a, b in rest.edges if (side_u >> a) & 1 and (side_u >> b) & 1)
        side_v = _reachable(masks, v, rest.n)
        edges_v = sum(1 for a, b in rest.edges if (side_v >> a) & 1 and (side_v >> b) & 1)
        if edges_u >= 1 and edges_v >= 1:
            result.add(eid)
    return result


def edge_codegree(g: Graph, edge_id: int) -> int:
    """d(u) + d(v) - 2 for the edge's endpoints: neighbors besides the edge."""
    u, v = g.edges[edge_id]
    degs = g.degrees()
    return degs[u] + degs[v] - 2


def cheeger_constant(g: Graph, cap: int = CHEEGER_VERTEX_CAP) -> Fraction:
    """Edge-expansion constant min |E(X, V-X)| / vol(X) over vol(X) <= vol(V)/2.

    Exhaustive over vertex subsets, so capped at `cap` vertices.  Volume is
    the degree sum of X.  Disconnected graphs have constant 0.
    """
    if g.m == 0:
        raise EmptyGraph("cheeger constant needs at least one edge")
    if g.n > cap:
        raise SizeCapExceeded(f"cheeger cap is {cap} vertices, got {g.n}")
    if not is_connected(g):
        return Fraction(0)
    masks = g.adjacency_masks()
    degs = g.degrees()
    total_vol = 2 * g.m
    best_num, best_den = 1, 0  # represents +infinity
    for subset in range(1, 1 << g.n):
        vol = 0
        rest = subset
        while rest:
            low = rest & -rest
            rest ^= low
            vol += degs[low.bit_length() - 1]
        if 2 * vol > total_vol:
            continue
        cut = 0
        rest = subset
        while rest:
            low = rest & -rest
            rest ^= low
            cut += (masks[low.bit_length() - 1] & ~subset).bit_count()
        # compare cut/vol < best_num/best_den without Fraction overhead
        if best_den == 0 or cut * best_den < best_num * vol:
            best_num, best_den = cut, vol
    return Fraction(best_num, best_den)
