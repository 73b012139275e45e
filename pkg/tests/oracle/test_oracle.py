import itertools

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from convex_steiner.errors import (
    DisconnectedGraphError,
    InfeasibleTerminalsError,
    OracleScaleError,
)
from convex_steiner.graphs.graph_core import (
    ConvexBipartiteGraph,
    GeneralGraph,
    as_networkx,
    x_vertex,
    y_vertex,
)
from convex_steiner.oracle.oracle import (
    is_dominating_set,
    is_vertex_cover,
    min_dominating_brute,
    min_steiner_brute,
    min_vertex_cover_brute,
)
from tests.strategies import (
    FIG1,
    PATH3,
    TRIANGLE,
    connected_convex_graphs,
    general_graphs,
)

FIG1_X = {x_vertex(p) for p in range(1, 5)}


# Tests for min_steiner_brute
def test_min_steiner_brute_first_worked_instance():
    result = min_steiner_brute(FIG1, FIG1_X)
    assert result.optimum == 2
    assert result.witness == frozenset({y_vertex(1), y_vertex(3)})
    assert result.explored == 7


def test_min_steiner_brute_counts_explored_candidates():
    result = min_steiner_brute(PATH3, {y_vertex(1), y_vertex(2)})
    assert result.optimum == 1
    assert result.witness == frozenset({x_vertex(2)})
    assert result.explored == 3


def test_min_steiner_brute_adjacent_terminals_need_nothing():
    result = min_steiner_brute(PATH3, {x_vertex(1), y_vertex(1)})
    assert (result.optimum, result.witness, result.explored) == (0, frozenset(), 1)


def test_min_steiner_brute_accepts_networkx_graphs():
    assert min_steiner_brute(nx.path_graph(5), {0, 4}).optimum == 3


def test_min_steiner_brute_guard_counts_non_terminals():
    graph = ConvexBipartiteGraph(m=6, intervals=((1, 6),) * 5)
    terminals = {x_vertex(p) for p in range(1, 7)}
    assert min_steiner_brute(graph, terminals, max_candidates=5).optimum == 1
    with pytest.raises(OracleScaleError, match="limited to 4 non-terminal vertices"):
        min_steiner_brute(graph, terminals, max_candidates=4)


@pytest.mark.parametrize(
    ("terminals", "match"),
    [(set(), "nonempty"), ({x_vertex(9)}, "Unknown terminal")],
)
def test_min_steiner_brute_invalid_terminals(terminals, match):
    with pytest.raises(InfeasibleTerminalsError, match=match):
        min_steiner_brute(FIG1, terminals)


def test_min_steiner_brute_disconnected_graph():
    graph = ConvexBipartiteGraph(m=2, intervals=((1, 1), (2, 2)))
    with pytest.raises(DisconnectedGraphError):
        min_steiner_brute(graph, {x_vertex(1), x_vertex(2)})


def _power_set_optimum(graph, terminals):
    host = as_networkx(graph)
    candidates = sorted(set(host) - terminals)
    return min(
        sum(picks)
        for picks in itertools.product((False, True), repeat=len(candidates))
        if nx.is_connected(
            host.subgraph(terminals | set(itertools.compress(candidates, picks)))
        )
    )


@settings(max_examples=50, deadline=None)
@given(connected_convex_graphs(max_m=5, max_n=5), st.data())
def test_min_steiner_brute_agrees_with_power_set_scan(graph, data):
    vertices = sorted(as_networkx(graph))
    terminals = set(
        data.draw(st.lists(st.sampled_from(vertices), min_size=1, unique=True))
    )
    result = min_steiner_brute(graph, terminals)
    assert result.optimum == _power_set_optimum(graph, terminals)
    assert len(result.witness) == result.optimum
    assert min_steiner_brute(graph, terminals) == result


# Tests for min_vertex_cover_brute
def test_min_vertex_cover_brute_triangle():
    result = min_vertex_cover_brute(TRIANGLE)
    assert result.optimum == 2
    assert result.witness == frozenset({1, 2})


def test_min_vertex_cover_brute_guard():
    with pytest.raises(OracleScaleError, match="limited to 2 vertices, got 3"):
        min_vertex_cover_brute(TRIANGLE, max_vertices=2)


@settings(max_examples=50, deadline=None)
@given(general_graphs(max_vertices=6))
def test_min_vertex_cover_brute_matches_complement_of_independent_set(graph):
    result = min_vertex_cover_brute(graph)
    host = as_networkx(graph)
    independent = max(
        len(clique) for clique in nx.find_cliques(nx.complement(host))
    )
    assert is_vertex_cover(graph, result.witness)
    assert result.optimum == graph.vertex_count - independent


# Tests for min_dominating_brute
def test_min_dominating_brute_path():
    result = min_dominating_brute(PATH3)
    assert result.optimum == 2
    assert result.witness == frozenset({x_vertex(1), y_vertex(2)})


def test_min_dominating_brute_guard():
    with pytest.raises(OracleScaleError, match="limited to 4 vertices, got 5"):
        min_dominating_brute(PATH3, max_vertices=4)


@settings(max_examples=50, deadline=None)
@given(general_graphs(max_vertices=6))
def test_min_dominating_brute_witness_dominates(graph):
    result = min_dominating_brute(graph)
    assert is_dominating_set(graph, result.witness)
    assert len(result.witness) == result.optimum


# Tests for is_vertex_cover and is_dominating_set
@pytest.mark.parametrize(
    ("cover", "expected"), [({1, 2}, True), ({2}, False), (set(), False)]
)
def test_is_vertex_cover(cover, expected):
    assert is_vertex_cover(TRIANGLE, cover) is expected


@pytest.mark.parametrize(
    ("dominating", "expected"),
    [
        ({x_vertex(2)}, False),
        ({y_vertex(1), y_vertex(2)}, True),
        ({x_vertex(9)}, False),
    ],
)
def test_is_dominating_set(dominating, expected):
    assert is_dominating_set(PATH3, dominating) is expected


def test_is_dominating_set_general_graph():
    star = GeneralGraph(vertex_count=4, edges=((1, 2), (1, 3), (1, 4)))
    assert is_dominating_set(star, {1})
