import pytest

from convex_steiner.errors import InfeasibleTerminalsError
from convex_steiner.graphs.graph_core import ConvexBipartiteGraph, y_vertex
from convex_steiner.reductions.mixed import lift_mixed_terminals
from tests.strategies import FIG1


# Tests for lift_mixed_terminals
def test_lift_mixed_terminals_appends_one_pendant_per_position():
    lift, lifted_terminals = lift_mixed_terminals(FIG1, [3, 1], [4])
    assert lift.pendant_map == {1: 5, 3: 6}
    assert lift.lifted_graph == ConvexBipartiteGraph(
        m=4, intervals=FIG1.intervals + ((1, 1), (3, 3))
    )
    assert lift.pendants == frozenset({y_vertex(5), y_vertex(6)})
    assert lifted_terminals == frozenset({4, 5, 6})


def test_lift_mixed_terminals_without_y_terminals():
    lift, lifted_terminals = lift_mixed_terminals(FIG1, [2])
    assert lift.lifted_graph.n == FIG1.n + 1
    assert lifted_terminals == frozenset({5})


@pytest.mark.parametrize(
    ("x_terminals", "y_terminals", "error"),
    [
        ([], [1], InfeasibleTerminalsError),
        ([5], [1], IndexError),
        ([1], [9], IndexError),
        ([1], [0], IndexError),
    ],
)
def test_lift_mixed_terminals_invalid_terminals(x_terminals, y_terminals, error):
    with pytest.raises(error):
        lift_mixed_terminals(FIG1, x_terminals, y_terminals)
