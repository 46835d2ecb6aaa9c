"""Canonical labeling of small graphs by ordered backtracking.

The canonical form is the vertex ordering whose upper-triangle adjacency
bits (in graph6 column-major order) are lexicographically largest; two
graphs get the same canonical form exactly when they are isomorphic.  The
search places one vertex at a time, comparing the growing bit string against
the best complete ordering found so far.  Two refinements keep symmetric
inputs from exploding factorially:

* prefix pruning: a partial ordering whose bits fall below the incumbent's
  at the current depth cannot lead to a maximum, and siblings are scanned in
  decreasing bit order so the whole remainder of the candidate list dies;
* automorphism pruning: every tie at a leaf exhibits an automorphism (the
  map sending the incumbent ordering to the tied one).  Discovered
  automorphisms that fix the placed prefix pointwise identify candidate
  vertices whose subtrees are mirror images of ones already explored.

This is exhaustive search, not a refinement-based tool, so it is capped at
CANONICAL_VERTEX_CAP vertices.
"""

from __future__ import annotations

from .errors import SizeCapExceeded
from .graphs import Graph
from .graph6 import serialize_graph6

CANONICAL_VERTEX_CAP = 16

_MAX_STORED_AUTOMORPHISMS = 64


def _search(n: int, masks: list[int]) -> tuple[list[int], list[tuple[int, ...]]]:
    """Return (ordering, automorphisms found along the way).

    ordering[pos] is the original vertex placed at position pos; the
    automorphisms are vertex maps discovered at tie leaves.  Inner loops are
    written for speed: candidates sort as plain (-bits, v) tuples, and the
    one-bit-per-vertex update is undone by shifting back rather than saving.
    """
    best_perm: list[int] | None = None
    best_cums: list[int] = [0] * n
    path_cums: list[int] = []
    autos: list[tuple[int, ...]] = []
    placed: list[int] = []
    unplaced = set(range(n))
    # vbits[v]: adjacency bits of v against the placed prefix, oldest first
    vbits = [0] * n

    def descend(depth: int, cum: int, tied: bool) -> None:
        nonlocal best_perm
        if depth == n:
            if best_perm is not None and tied:
                # equal bit strings at every depth: an automorphism
                if len(autos) < _MAX_STORED_AUTOMORPHISMS:
                    sigma = [0] * n
                    for pos in range(n):
                        sigma[best_perm[pos]] = placed[pos]
                    autos.append(tuple(sigma))
            else:
                best_perm = placed.copy()
                best_cums[:] = path_cums
            return
        vb = vbits
        candidates = sorted((-vb[v], v) for v in unplaced)
        on_best = tied and best_perm is not None
        tried: set[int] = set()
        shifted = cum << depth
        for negbits, v in candidates:
            ncum = shifted - negbits  # negbits = -vbits[v]; bits fit below shift
            if on_best:
                incumbent = best_cums[depth]
                if ncum < incumbent:
                    break  # later candidates have smaller bits still
                child_tied = ncum == incumbent
            else:
                child_tied = False
            if tried and autos:
                pruned = False
                for sigma in autos:
                    if sigma[v] in tried:
                        fixes = True
                        for u in placed:
                            if sigma[u] != u:
                                fixes = False
                                break
                        if fixes:
                            pruned = True
                            break
                if pruned:
                    continue
            placed.append(v)
            unplaced.remove(v)
            path_cums.append(ncum)
            mv = masks[v]
            for u in unplaced:
                vb[u] = (vb[u] << 1) | ((mv >> u) & 1)
            descend(depth + 1, ncum, child_tied)
            for u in unplaced:
                vb[u] >>= 1
            path_cums.pop()
            unplaced.add(v)
            placed.pop()
            tried.add(v)
            on_best = True  # incumbent now passes through this node

    if n == 0:
        return [], []
    descend(0, 0, False)
    assert best_perm is not None
    return best_perm, autos


def canonical_data(g: Graph, cap: int = CANONICAL_VERTEX_CAP) -> tuple[bytes, list[tuple[int, ...]]]:
    """Canonical key plus the automorphisms found while computing it.

    The automorphism list is not the full group, just the generators the
    search stumbled on; callers use them for orbit computations where any
    subgroup gives sound (if coarser) orbits.
    """
    if g.n > cap:
        raise SizeCapExceeded(f"canonical labeling cap is {cap} vertices, got {g.n}")
    ordering, autos = _search(g.n, g.adjacency_masks())
    position = [0] * g.n
    for pos, v in enumerate(ordering):
        position[v] = pos
    relabeled = g.relabel(position)
    canonical = Graph(g.n, tuple(sorted(relabeled.edges)))
    return serialize_graph6(canonical).encode("ascii"), autos


def canonical_form(g: Graph, cap: int = CANONICAL_VERTEX_CAP) -> Graph:
    """Isomorphism-class representative with lexicographic edge order."""
    if g.n > cap:
        raise SizeCapExceeded(f"canonical labeling cap is {cap} vertices, got {g.n}")
    ordering, _ = _search(g.n, g.adjacency_masks())
    position = [0] * g.n
    for pos, v in enumerate(ordering):
        position[v] = pos
    relabeled = g.relabel(position)
    return Graph(g.n, tuple(sorted(relabeled.edges)))


def canonical_key(g: Graph, cap: int = CANONICAL_VERTEX_CAP) -> bytes:
    """Complete isomorphism invariant: graph6 bytes of the canonical form."""
    return canonical_data(g, cap)[0]


def _vertex_maps(g: Graph):
    """Yield every adjacency-preserving vertex bijection (identity first)."""
    n = g.n
    masks = g.adjacency_masks()
    degs = g.degrees()
    image = [-1] * n
    used = [False] * n

    def extend(v: int):
        if v == n:
            yield tuple(image)
            return
        for w in range(n):
            if used[w] or degs[w] != degs[v]:
                continue
            ok = True
            for prev in range(v):
                if ((masks[v] >> prev) & 1) != ((masks[w] >> image[prev]) & 1):
                    ok = False
                    break
            if ok:
                image[v] = w
                used[w] = True
                yield from extend(v + 1)
                used[w] = False
        image[v] = -1

    yield from extend(0)


def automorphisms(g: Graph, cap: int = CANONICAL_VERTEX_CAP) -> list[tuple[int, ...]]:
    """The full automorphism group as vertex maps (identity included)."""
    if g.n > cap:
        raise SizeCapExceeded(f"automorphism cap is {cap} vertices, got {g.n}")
    return list(_vertex_maps(g))


def is_edge_transitive(g: Graph, cap: int = CANONICAL_VERTEX_CAP) -> bool:
    """Whether the automorphism group acts transitively on the edges.

    Stops enumerating automorphisms as soon as the discovered ones already
    merge all edges into one orbit.
    """
    if g.n > cap:
        raise SizeCapExceeded(f"automorphism cap is {cap} vertices, got {g.n}")
    if g.m <= 1:
        return True
    index = {e: i for i, e in enumerate(g.edges)}
    parent = list(range(g.m))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    classes = g.m
    for sigma in _vertex_maps(g):
        for i, (u, v) in enumerate(g.edges):
            a, b = sigma[u], sigma[v]
            j = index[(a, b) if a < b else (b, a)]
            ri, rj = find(i), find(j)
            if ri != rj:
                parent[ri] = rj
                classes -= 1
        if classes == 1:
            return True
    return False
