import pytest
from hypothesis import given, settings

from convex_steiner.graphs.graph_core import ConvexBipartiteGraph, x_vertex
from convex_steiner.oracle.oracle import is_dominating_set, min_dominating_brute
from convex_steiner.reductions.domination import dominating_set_via_stree
from tests.strategies import PATH3, TABLE1, connected_convex_graphs


# Tests for dominating_set_via_stree
def test_dominating_set_via_stree_is_not_always_minimum():
    dominating = dominating_set_via_stree(PATH3)
    assert sorted(map(str, dominating)) == ["x2", "y1", "y2"]
    assert min_dominating_brute(PATH3).optimum == 2


def test_dominating_set_via_stree_single_edge():
    graph = ConvexBipartiteGraph(m=1, intervals=((1, 1),))
    assert dominating_set_via_stree(graph) == frozenset({x_vertex(1)})


def test_dominating_set_via_stree_scan_instance():
    dominating = dominating_set_via_stree(TABLE1)
    assert is_dominating_set(TABLE1, dominating)


def test_dominating_set_via_stree_requires_y_side():
    with pytest.raises(ValueError, match="at least one Y vertex"):
        dominating_set_via_stree(ConvexBipartiteGraph(m=1, intervals=()))


@settings(max_examples=60, deadline=None)
@given(connected_convex_graphs(max_m=7, max_n=6))
def test_dominating_set_via_stree_always_dominates(graph):
    dominating = dominating_set_via_stree(graph)
    assert is_dominating_set(graph, dominating)
    assert len(dominating) >= min_dominating_brute(graph).optimum
