"""The forest-building process and exact component-count distributions.

Processing an edge ordering keeps each edge that touches at least one
previously untouched vertex; the kept edges form a forest covering every
non-isolated vertex.  kappa counts its trees, equivalently the kept edges
whose endpoints were both untouched.

Exact distributions come from two independent routes: DFS over all m!
orderings (the oracle, capped at 10 edges) and the edge-deletion recurrence

    p_G = p_{G1} * p_{G2} * ...          over connected components,
    p_G = (1/m) * sum_e p_{G - e}        for a component with >= 2 edges,
    p_{K_2} = x,  p_{K_1} = 1,

memoized across isomorphic subgraphs by canonical key.  Edge deletions are
grouped into automorphism orbits (isomorphic children computed once and
weighted by orbit size), which is what makes dense symmetric inputs such as
complete multipartite graphs tractable.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .canon import canonical_data
from .distribution import ForestDistribution, convolve
from .errors import (
    DisconnectedInput,
    EmptyGraph,
    InvalidOrdering,
    MemoryBudgetExceeded,
    TooManyEdges,
)
from .graphs import Graph, components, is_connected, large_bridges

BRUTE_FORCE_EDGE_CAP = 10

_ONE = Fraction(1)


@dataclass(frozen=True)
class ProcessResult:
    kept: frozenset[int]
    kappa: int


def run_process(g: Graph, ordering: list[int] | tuple[int, ...]) -> ProcessResult:
    """Run the process for one explicit edge ordering."""
    if sorted(ordering) != list(range(g.m)):
        raise InvalidOrdering("ordering must be a permutation of 0..m-1")
    touched = [False] * g.n
    kept = []
    kappa = 0
    for eid in ordering:
        u, v = g.edges[eid]
        new_u, new_v = not touched[u], not touched[v]
        if new_u or new_v:
            kept.append(eid)
            touched[u] = touched[v] = True
            if new_u and new_v:
                kappa += 1
    return ProcessResult(frozenset(kept), kappa)


def brute_force_distribution(g: Graph) -> ForestDistribution:
    """Exact distribution by summing over all m! orderings.

    DFS over sets of already-processed edges: the distribution of the rest
    of the ordering depends only on that set (the touched vertices are
    determined by it), so suffix counts are shared across prefixes.
    """
    m = g.m
    if m > BRUTE_FORCE_EDGE_CAP:
        raise TooManyEdges(f"brute force cap is {BRUTE_FORCE_EDGE_CAP} edges, got {m}")
    if m == 0:
        return ForestDistribution(g.n, 0, {})
    edge_masks = [(1 << u) | (1 << v) for u, v in g.edges]
    full = (1 << m) - 1
    memo: dict[int, dict[int, int]] = {}

    def suffix_counts(used: int, touched: int) -> dict[int, int]:
        # counts[k] = number of orderings of the unused edges creating k trees
        if used == full:
            return {0: 1}
        cached = memo.get(used)
        if cached is not None:
            return cached
        counts: dict[int, int] = {}
        for eid in range(m):
            bit = 1 << eid
            if used & bit:
                continue
            tree_event = 1 if (touched & edge_masks[eid]) == 0 else 0
            for k, c in suffix_counts(used | bit, touched | edge_masks[eid]).items():
                kk = k + tree_event
                counts[kk] = counts.get(kk, 0) + c
        memo[used] = counts
        return counts

    orderings_by_k = suffix_counts(0, 0)
    total = sum(orderings_by_k.values())
    probs = {k: Fraction(c, total) for k, c in sorted(orderings_by_k.items())}
    return ForestDistribution(g.n, m, probs)


def expected_components(g: Graph) -> Fraction:
    """Sum over edges uv of 1/(d(u) + d(v) - 1)."""
    if g.m == 0:
        raise EmptyGraph("expectation needs at least one edge")
    degs = g.degrees()
    return sum((Fraction(1, degs[u] + degs[v] - 1) for u, v in g.edges), Fraction(0))


class PolynomialEngine:
    """Memoized evaluator for exact distributions and one-component values.

    One engine instance owns two memo tables keyed by canonical key: full
    coefficient maps for connected components, and bare k=1 coefficients for
    the pruned one-component recurrence.  Keys are isomorphism invariants,
    so tables can be shared across graphs and reused for an entire sweep.
    Inserts are idempotent (a recomputed key stores the identical value),
    so concurrent sibling evaluation would be sound as well.

    `max_memo_entries` optionally bounds the table sizes; exceeding the
    budget raises MemoryBudgetExceeded rather than thrashing.
    """

    def __init__(self, memoize: bool = True, max_memo_entries: int | None = None):
        self.memoize = memoize
        self.max_memo_entries = max_memo_entries
        self._poly: dict[bytes, dict[int, Fraction]] = {}
        self._one: dict[bytes, Fraction] = {}
        # labeled-graph -> canonical key; skips repeat canonicalizations of
        # literally identical subgraphs arriving via different parents
        self._labels: dict[tuple[int, int], bytes] = {}

    # --- full distribution ---

    def distribution(self, g: Graph) -> ForestDistribution:
        """Exact p_G as a distribution; edgeless graphs give the empty map."""
        acc = {0: _ONE}
        pieces, _ = components(g)
        for piece, _vmap in sorted(pieces, key=lambda item: item[0].m):
            acc = convolve(acc, self._component_poly(piece))
        probs = {k: v for k, v in acc.items() if k > 0}
        return ForestDistribution(g.n, g.m, probs)

    def _component_poly(self, comp: Graph) -> dict[int, Fraction]:
        # comp is connected with no isolated vertices and >= 1 edge
        if comp.m == 1:
            return {1: _ONE}
        key, autos = self._canonical(comp, self._poly)
        if self.memoize:
            cached = self._poly.get(key)
            if cached is not None:
                return cached
        if autos is None:
            key, autos = canonical_data(comp)
        acc: dict[int, Fraction] = {}
        for eid, weight in _edge_orbit_representatives(comp, autos):
            child_probs = {0: _ONE}
            child_pieces, _ = components(comp.delete_edge(eid))
            for piece, _vmap in sorted(child_pieces, key=lambda item: item[0].m):
                child_probs = convolve(child_probs, self._component_poly(piece))
            w = Fraction(weight)
            for k, p in child_probs.items():
                acc[k] = acc.get(k, Fraction(0)) + w * p
        result = {k: p / comp.m for k, p in sorted(acc.items()) if p}
        if self.memoize:
            self._store(self._poly, key, result)
        return result

    # --- k = 1 coefficient only ---

    def one_component(self, g: Graph) -> Fraction:
        """P(G,1) by the recurrence that skips large bridges.

        Deleting a large bridge leaves two edge-bearing components and thus
        at least two trees, so those children contribute nothing to k=1 and
        are never visited.
        """
        if g.m == 0:
            raise EmptyGraph("one-component probability needs at least one edge")
        if not is_connected(g):
            raise DisconnectedInput("one-component probability needs a connected graph")
        return self._component_one(g)

    def _component_one(self, comp: Graph) -> Fraction:
        if comp.m == 1:
            return _ONE
        key, autos = self._canonical(comp, self._one)
        if self.memoize:
            cached = self._one.get(key)
            if cached is not None:
                return cached
        if autos is None:
            key, autos = canonical_data(comp)
        skip = large_bridges(comp)
        acc = Fraction(0)
        for eid, weight in _edge_orbit_representatives(comp, autos):
            if eid in skip:
                continue
            child_pieces, _ = components(comp.delete_edge(eid))
            # e was not a large bridge, so exactly one piece carries edges
            (piece, _vmap), = child_pieces
            acc += weight * self._component_one(piece)
        result = acc / comp.m
        if self.memoize:
            self._store(self._one, key, result)
        return result

    def _canonical(self, comp: Graph, value_table: dict):
        """Canonical key via the labeled cache; autos only when freshly computed.

        Returns (key, autos_or_None).  A None autos with a value-table miss
        means the caller must recompute canonical_data to get generators;
        that only happens when a labeled graph reappears for the other table.
        """
        if not self.memoize:
            return canonical_data(comp)
        mask = 0
        for u, v in comp.edges:
            mask |= 1 << (v * (v - 1) // 2 + u)
        label = (comp.n, mask)
        key = self._labels.get(label)
        if key is not None:
            return key, None
        key, autos = canonical_data(comp)
        self._store(self._labels, label, key)
        return key, autos

    def _store(self, table: dict, key, value) -> None:
        if (
            self.max_memo_entries is not None
            and key not in table
            and len(table) >= self.max_memo_entries
        ):
            raise MemoryBudgetExceeded(
                f"memo budget of {self.max_memo_entries} entries exhausted"
            )
        table[key] = value

    def memo_sizes(self) -> tuple[int, int]:
        return len(self._poly), len(self._one)


def _edge_orbit_representatives(g: Graph, autos: list[tuple[int, ...]]):
    """Orbits of the edge set under the given automorphisms.

    Yields (edge_id, orbit_size) for one representative per orbit.  Any
    subgroup gives sound orbits: members of a coarse orbit are genuinely
    equivalent, just possibly not all equivalences are found, costing memo
    hits rather than correctness.
    """
    if not autos:
        for eid in range(g.m):
            yield eid, 1
        return
    index = {e: i for i, e in enumerate(g.edges)}
    parent = list(range(g.m))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for sigma in autos:
        for i, (u, v) in enumerate(g.edges):
            a, b = sigma[u], sigma[v]
            j = index[(a, b) if a < b else (b, a)]
            ri, rj = find(i), find(j)
            if ri != rj:
                parent[ri] = rj
    orbits: dict[int, int] = {}
    for i in range(g.m):
        r = find(i)
        orbits[r] = orbits.get(r, 0) + 1
    for root in sorted(orbits):
        yield root, orbits[root]


_DEFAULT_ENGINE = PolynomialEngine()


def forest_polynomial(g: Graph, engine: PolynomialEngine | None = None) -> ForestDistribution:
    """Exact distribution of the process component count for g."""
    return (engine or _DEFAULT_ENGINE).distribution(g)


def single_component_probability(g: Graph, engine: PolynomialEngine | None = None) -> Fraction:
    """Exact P(G,1) for connected g via the large-bridge-pruned recurrence."""
    return (engine or _DEFAULT_ENGINE).one_component(g)
