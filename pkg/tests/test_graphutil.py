import itertools

import pytest

from rectangle_forge.core import PartialRectangle
from rectangle_forge.graphutil import (
    EmptyGraph,
    MultiEdgeReport,
    SimpleGraph,
    WrongRowCount,
    all_graphs,
    encode_graph,
    format_edge_list,
    is_cubic_triangle_free,
    parse_edge_list,
    underlying_graph,
)
from rectangle_forge.oracle import all_matchings, brute_isomorphic

from conftest import rect

K33 = SimpleGraph.from_edges(6, [(a, b) for a in (1, 2, 3) for b in (4, 5, 6)])
K4 = SimpleGraph.from_edges(4, itertools.combinations(range(1, 5), 2))


def test_cubic_triangle_free_examples():
    assert is_cubic_triangle_free(K33)
    assert not is_cubic_triangle_free(K4)
    c5 = SimpleGraph.from_edges(5, [(i, i % 5 + 1) for i in range(1, 6)])
    assert not is_cubic_triangle_free(c5)


def test_multi_edge_report():
    r = rect(3, 4, ((1, 1), (2, 2)), ((2, 1), (3, 2)))
    rep = underlying_graph(r)
    assert isinstance(rep, MultiEdgeReport) and rep.multi == (((1, 2), 2),)
    loop = underlying_graph(rect(3, 2, ((1, 1), (3, 1))))
    assert isinstance(loop, MultiEdgeReport) and loop.loops == (1,)


def test_wrong_row_count(diag2):
    with pytest.raises(WrongRowCount):
        underlying_graph(diag2)


def test_3x4_graphs_never_cubic_triangle_free():
    # a simple cubic graph on 4 vertices is K4
    for r in all_matchings(3, 4):
        g = underlying_graph(r)
        if isinstance(g, SimpleGraph):
            assert g == K4 and not is_cubic_triangle_free(g)


def test_encode_single_edge():
    r = encode_graph(SimpleGraph.from_edges(2, [(1, 2)]))
    assert r == rect(2, 2, ((1, 1), (2, 1)), ((1, 2), (2, 2)))


def test_encode_triangle_and_path():
    tri = encode_graph(SimpleGraph.from_edges(3, [(1, 2), (2, 3), (1, 3)]))
    assert (tri.n, tri.m) == (3, 6) and tri.is_complete
    path = encode_graph(SimpleGraph.from_edges(3, [(1, 2), (2, 3)]))
    assert (path.n, path.m) == (3, 4) and path.is_complete


def test_encode_four_vertex_graphs():
    star = SimpleGraph.from_edges(4, [(1, 2), (1, 3), (1, 4)])
    star2 = SimpleGraph.from_edges(4, [(4, 1), (4, 2), (4, 3)])
    path = SimpleGraph.from_edges(4, [(1, 2), (2, 3), (3, 4)])
    assert brute_isomorphic(encode_graph(star), encode_graph(star2))
    assert not brute_isomorphic(encode_graph(star), encode_graph(path))


def test_encode_rejects_empty():
    with pytest.raises(EmptyGraph):
        encode_graph(SimpleGraph(3))


def test_all_graphs_counts():
    assert sum(1 for _ in all_graphs(4, min_edges=0)) == 64
    assert sum(1 for _ in all_graphs(3)) == 7


def test_edge_list_roundtrip():
    assert parse_edge_list(format_edge_list(K33)) == K33
    with pytest.raises(ValueError):
        parse_edge_list("p 3 2\ne 1 2\n")
    with pytest.raises(ValueError):
        parse_edge_list("e 1 2\n")


def test_simple_graph_validation():
    with pytest.raises(ValueError):
        SimpleGraph.from_edges(3, [(1, 1)])
    with pytest.raises(ValueError):
        SimpleGraph.from_edges(3, [(1, 2), (2, 1)])
    with pytest.raises(ValueError):
        SimpleGraph.from_edges(2, [(1, 3)])
