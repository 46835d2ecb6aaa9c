"""Deterministic and random graph family generators.

Deterministic families fix both the labeling and the edge list order, so a
given spec always reproduces the identical Graph object.  Random families
are pure functions of their seed.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import GenerationTimeout, InfeasibleSpec
from .graphs import Graph, from_edge_list
from .rng import SplitMix64, derive_seed

_REGULAR_RETRY_CAP = 10_000


@dataclass(frozen=True)
class GeneratorSpec:
    """Replayable description of a graph: family name, sizes, optional seed."""

    family: str
    params: tuple[int, ...]
    seed: int | None = None


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise InfeasibleSpec("complete graph needs n >= 1")
    return Graph(n, tuple((i, j) for i in range(n) for j in range(i + 1, n)))


def complete_bipartite(s: int, t: int) -> Graph:
    """K_{s,t} with part A = 0..s-1, part B = s..s+t-1."""
    if s < 1 or t < 1:
        raise InfeasibleSpec("complete bipartite needs s, t >= 1")
    return Graph(s + t, tuple((a, s + b) for a in range(s) for b in range(t)))


def complete_multipartite(sizes: tuple[int, ...]) -> Graph:
    """Complete multipartite graph; parts occupy consecutive label ranges."""
    if not sizes or any(s < 1 for s in sizes):
        raise InfeasibleSpec("part sizes must all be >= 1")
    part = []
    for pid, size in enumerate(sizes):
        part.extend([pid] * size)
    n = len(part)
    edges = tuple(
        (i, j) for i in range(n) for j in range(i + 1, n) if part[i] != part[j]
    )
    return Graph(n, edges)


def path_graph(n: int) -> Graph:
    """Path on n vertices (n - 1 edges)."""
    if n < 1:
        raise InfeasibleSpec("path needs n >= 1")
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise InfeasibleSpec("cycle needs n >= 3")
    edges = [(i, i + 1) for i in range(n - 1)]
    edges.append((0, n - 1))
    return Graph(n, tuple(edges))


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with the center labeled 0."""
    if leaves < 1:
        raise InfeasibleSpec("star needs at least one leaf")
    return Graph(leaves + 1, tuple((0, i) for i in range(1, leaves + 1)))


def balanced_bipartite_plus_edge(k: int) -> Graph:
    """K_{k,k+1} plus one edge inside the larger part (2k + 1 vertices).

    Parts are A = 0..k-1 and B = k..2k; the extra edge joins the first two
    vertices of B.
    """
    if k < 1:
        raise InfeasibleSpec("needs k >= 1")
    base = complete_bipartite(k, k + 1)
    return base.add_edge(k, k + 1)


def gnm_random_graph(n: int, m: int, seed: int) -> Graph:
    """Uniform graph with n vertices and m edges; pure function of the seed."""
    if n < 1:
        raise InfeasibleSpec("gnm needs n >= 1")
    total = comb(n, 2)
    if not 0 <= m <= total:
        raise InfeasibleSpec(f"gnm needs 0 <= m <= {total}")
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    rng = SplitMix64(derive_seed(seed, 0x6E6D))
    chosen = sorted(rng.sample(total, m))
    return Graph(n, tuple(pairs[i] for i in chosen))


def random_regular_graph(n: int, d: int, seed: int) -> Graph:
    """Uniform-ish d-regular graph via the pairing model with rejection.

    Stubs are shuffled and paired; draws with self-loops or repeated pairs
    are rejected wholesale, so conditioned on acceptance the simple graphs
    appear with the pairing-model weights.  Raises GenerationTimeout after
    a retry budget, InfeasibleSpec when n*d is odd or d >= n.
    """
    if n < 1 or d < 0:
        raise InfeasibleSpec("regular graph needs n >= 1 and d >= 0")
    if d >= n or (n * d) % 2 == 1:
        raise InfeasibleSpec(f"no simple {d}-regular graph on {n} vertices")
    if d == 0:
        return Graph(n, ())
    for attempt in range(_REGULAR_RETRY_CAP):
        rng = SplitMix64(derive_seed(seed, 0x7265, attempt))
        stubs = [v for v in range(n) for _ in range(d)]
        rng.shuffle(stubs)
        edges: set[tuple[int, int]] = set()
        ok = True
        for i in range(0, len(stubs), 2):
            u, v = stubs[i], stubs[i + 1]
            if u == v:
                ok = False
                break
            if u > v:
                u, v = v, u
            if (u, v) in edges:
                ok = False
                break
            edges.add((u, v))
        if ok:
            return Graph(n, tuple(sorted(edges)))
    raise GenerationTimeout(
        f"no simple pairing found for n={n}, d={d} in {_REGULAR_RETRY_CAP} tries"
    )


def generate(spec: GeneratorSpec) -> Graph:
    """Build the graph a GeneratorSpec describes."""
    family, p = spec.family, spec.params
    if family == "complete":
        return complete_graph(*p)
    if family == "complete_bipartite":
        return complete_bipartite(*p)
    if family == "complete_multipartite":
        return complete_multipartite(p)
    if family == "path":
        return path_graph(*p)
    if family == "cycle":
        return cycle_graph(*p)
    if family == "star":
        return star_graph(*p)
    if family == "bipartite_plus_edge":
        return balanced_bipartite_plus_edge(*p)
    if family == "gnm":
        if spec.seed is None:
            raise InfeasibleSpec("gnm needs a seed")
        return gnm_random_graph(p[0], p[1], spec.seed)
    if family == "random_regular":
        if spec.seed is None:
            raise InfeasibleSpec("random_regular needs a seed")
        return random_regular_graph(p[0], p[1], spec.seed)
    raise InfeasibleSpec(f"unknown family {family!r}")
