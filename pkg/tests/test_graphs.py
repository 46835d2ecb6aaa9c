"""Graph container, edge list text format, and structural helpers."""

from fractions import Fraction
from math import ceil

import pytest

from forestbuilder.errors import (
    DuplicateEdge,
    EmptyGraph,
    MalformedEdgeList,
    SelfLoop,
    SizeCapExceeded,
    VertexOutOfRange,
)
from forestbuilder.families import (
    complete_bipartite,
    complete_graph,
    cycle_graph,
    path_graph,
    star_graph,
)
from forestbuilder.graphs import (
    Graph,
    cheeger_constant,
    components,
    edge_codegree,
    format_edge_list,
    from_edge_list,
    is_connected,
    large_bridges,
    parse_edge_list,
)


def test_from_edge_list_normalizes_and_keeps_order():
    g = from_edge_list(3, [(1, 0), (2, 1), (0, 2)])
    assert g.n == 3
    assert g.edges == ((0, 1), (1, 2), (0, 2))
    assert g.m == 3
    assert g.degrees() == [2, 2, 2]


def test_from_edge_list_rejects_bad_input():
    with pytest.raises(VertexOutOfRange):
        from_edge_list(3, [(0, 3)])
    with pytest.raises(SelfLoop):
        from_edge_list(3, [(0, 0)])
    with pytest.raises(DuplicateEdge):
        from_edge_list(3, [(0, 1), (1, 0)])


def test_has_edge_ignores_orientation():
    g = from_edge_list(4, [(0, 1), (2, 3)])
    assert g.has_edge(1, 0) and g.has_edge(0, 1)
    assert not g.has_edge(0, 2)


def test_delete_edge_shifts_ids():
    p4 = path_graph(4)
    rest = p4.delete_edge(1)
    assert rest.n == 4
    assert rest.edges == ((0, 1), (2, 3))
    with pytest.raises(IndexError):
        p4.delete_edge(3)


def test_add_edge_validates():
    g = path_graph(3).add_edge(0, 2)
    assert g.edge_set() == cycle_graph(3).edge_set()
    with pytest.raises(DuplicateEdge):
        g.add_edge(2, 0)


def test_relabel_permutes_endpoints():
    p4 = path_graph(4)
    g = p4.relabel([3, 2, 1, 0])
    assert g.edges == ((2, 3), (1, 2), (0, 1))
    assert sorted(g.degrees()) == sorted(p4.degrees())


def test_adjacency_masks_match_edges():
    g = from_edge_list(4, [(0, 1), (1, 2), (1, 3)])
    masks = g.adjacency_masks()
    assert masks[1] == 0b1101
    assert masks[0] == 0b0010
    assert masks[3] == 0b0010


def test_edge_list_text_round_trip():
    g = path_graph(4)
    text = format_edge_list(g)
    assert text == "4 3\n0 1\n1 2\n2 3\n"
    assert parse_edge_list(text) == g


def test_edge_list_text_ignores_comments_and_blanks():
    text = "# a path\n\n4 3\n0 1\n# middle edge\n1 2\n2 3\n"
    assert parse_edge_list(text) == path_graph(4)


def test_edge_list_text_rejects_malformed():
    bad_inputs = [
        "",
        "4\n0 1\n",
        "4 2\n0 1\n",
        "4 1\n0 1\n1 2\n",
        "4 1\n0 1 2\n",
    ]
    for bad in bad_inputs:
        with pytest.raises(MalformedEdgeList):
            parse_edge_list(bad)


def test_is_connected():
    assert is_connected(path_graph(4))
    assert is_connected(Graph(1, ()))
    assert not is_connected(Graph(3, ()))
    assert not is_connected(from_edge_list(5, [(0, 1), (1, 2), (3, 4)]))


def test_components_split_and_relabel():
    g = from_edge_list(5, [(0, 1), (1, 2), (0, 2), (3, 4)])
    pieces, isolated = components(g)
    assert isolated == 0
    (tri, tri_map), (edge, edge_map) = pieces
    assert tri.edges == ((0, 1), (1, 2), (0, 2))
    assert tri_map == (0, 1, 2)
    assert edge.edges == ((0, 1),)
    assert edge_map == (3, 4)


def test_components_counts_isolated_vertices():
    pieces, isolated = components(Graph(3, ()))
    assert pieces == [] and isolated == 3
    pieces, isolated = components(from_edge_list(4, [(1, 2)]))
    assert isolated == 2
    assert pieces[0][1] == (1, 2)


def test_large_bridges_on_paths():
    assert large_bridges(path_graph(2)) == set()
    assert large_bridges(path_graph(4)) == {1}
    assert large_bridges(path_graph(6)) == {1, 2, 3}


def test_large_bridges_exclude_pendants_and_cycles():
    assert large_bridges(cycle_graph(5)) == set()
    assert large_bridges(star_graph(4)) == set()
    paw = from_edge_list(4, [(0, 1), (1, 2), (0, 2), (0, 3)])
    assert large_bridges(paw) == set()
    two_triangles = from_edge_list(
        6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)]
    )
    assert large_bridges(two_triangles) == {6}


def test_large_bridges_split_off_an_edge_on_each_side(connected_classes):
    for n in range(2, 7):
        for g in connected_classes[n]:
            for eid in large_bridges(g):
                pieces, isolated = components(g.delete_edge(eid))
                assert isolated == 0
                assert len(pieces) == 2
                assert all(piece.m >= 1 for piece, _ in pieces)


def test_edge_codegree():
    k4 = complete_graph(4)
    assert all(edge_codegree(k4, e) == 4 for e in range(k4.m))
    p4 = path_graph(4)
    assert edge_codegree(p4, 0) == 1
    assert edge_codegree(p4, 1) == 2
    k23 = complete_bipartite(2, 3)
    assert all(edge_codegree(k23, e) == 3 for e in range(k23.m))


def test_cheeger_known_values():
    assert cheeger_constant(complete_graph(4)) == Fraction(2, 3)
    assert cheeger_constant(cycle_graph(4)) == Fraction(1, 2)
    assert cheeger_constant(path_graph(4)) == Fraction(1, 3)
    assert cheeger_constant(star_graph(3)) == 1


def test_cheeger_complete_graphs():
    # the sparse side is a half-size clique: cut k(n-k), volume k(n-1)
    for n in range(2, 9):
        assert cheeger_constant(complete_graph(n)) == Fraction(ceil(n / 2), n - 1)


def test_cheeger_disconnected_and_errors():
    assert cheeger_constant(from_edge_list(4, [(0, 1), (2, 3)])) == 0
    with pytest.raises(EmptyGraph):
        cheeger_constant(Graph(3, ()))
    with pytest.raises(SizeCapExceeded):
        cheeger_constant(Graph(21, ((0, 1),)))
