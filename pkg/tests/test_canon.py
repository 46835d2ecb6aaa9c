"""Canonical labeling, automorphism groups, and edge transitivity."""

from itertools import combinations, permutations

import pytest

from forestbuilder.canon import (
    CANONICAL_VERTEX_CAP,
    automorphisms,
    canonical_form,
    canonical_key,
    is_edge_transitive,
)
from forestbuilder.errors import SizeCapExceeded
from forestbuilder.families import (
    complete_bipartite,
    complete_graph,
    cycle_graph,
    path_graph,
    star_graph,
)
from forestbuilder.graph6 import serialize_graph6
from forestbuilder.graphs import Graph, from_edge_list
from forestbuilder.rng import SplitMix64


def test_key_invariant_under_all_relabelings():
    p4 = path_graph(4)
    keys = {canonical_key(p4.relabel(perm)) for perm in permutations(range(4))}
    assert len(keys) == 1


def test_distinct_classes_get_distinct_keys():
    c4 = cycle_graph(4)
    paw = from_edge_list(4, [(0, 1), (1, 2), (0, 2), (0, 3)])
    assert c4.m == paw.m
    assert canonical_key(c4) != canonical_key(paw)


def test_all_four_vertex_classes_separated():
    pairs = list(combinations(range(4), 2))
    keys = set()
    for subset in range(64):
        edges = tuple(pairs[i] for i in range(6) if (subset >> i) & 1)
        keys.add(canonical_key(Graph(4, edges)))
    assert len(keys) == 11


def test_random_relabelings_fixed_key(connected_classes):
    rng = SplitMix64(7)
    for n, graphs in connected_classes.items():
        perm = list(range(n))
        for g in graphs:
            base = canonical_key(g)
            for _ in range(50):
                rng.shuffle(perm)
                assert canonical_key(g.relabel(perm)) == base


def test_canonical_form_properties():
    g = from_edge_list(5, [(0, 4), (4, 2), (2, 1), (1, 3), (3, 0)])  # a scrambled C_5
    cf = canonical_form(g)
    assert canonical_key(cf) == canonical_key(g)
    assert sorted(cf.degrees()) == sorted(g.degrees())
    assert canonical_form(cf) == cf
    assert serialize_graph6(cf).encode("ascii") == canonical_key(g)


def test_automorphism_group_sizes():
    assert len(automorphisms(complete_graph(3))) == 6
    assert len(automorphisms(complete_graph(4))) == 24
    assert len(automorphisms(path_graph(4))) == 2
    assert len(automorphisms(cycle_graph(4))) == 8
    assert len(automorphisms(complete_bipartite(2, 3))) == 12
    assert len(automorphisms(star_graph(3))) == 6


def test_automorphisms_preserve_edges():
    g = from_edge_list(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (1, 3)])
    maps = automorphisms(g)
    assert maps
    for sigma in maps:
        mapped = {tuple(sorted((sigma[u], sigma[v]))) for u, v in g.edges}
        assert mapped == set(g.edges)


def test_edge_transitive_families():
    for n in range(2, 6):
        assert is_edge_transitive(complete_graph(n))
    for s in range(1, 4):
        for t in range(1, 4):
            assert is_edge_transitive(complete_bipartite(s, t))
    for n in range(3, 7):
        assert is_edge_transitive(cycle_graph(n))
    assert is_edge_transitive(star_graph(5))
    assert is_edge_transitive(Graph(1, ()))
    assert not is_edge_transitive(path_graph(4))
    assert not is_edge_transitive(complete_graph(4).delete_edge(0))


def test_vertex_cap():
    big = Graph(CANONICAL_VERTEX_CAP + 1, ((0, 1),))
    with pytest.raises(SizeCapExceeded):
        canonical_key(big)
    with pytest.raises(SizeCapExceeded):
        automorphisms(big)
    with pytest.raises(SizeCapExceeded):
        is_edge_transitive(Graph(CANONICAL_VERTEX_CAP + 1, ((0, 1), (1, 2))))
