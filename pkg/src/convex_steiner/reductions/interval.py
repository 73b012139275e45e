"""This script deploys the Steiner solver for interval graphs through their convex
bipartite image."""

from convex_steiner.errors import InfeasibleTerminalsError
from convex_steiner.graphs.graph_core import (
    ConvexBipartiteGraph,
    require_connected,
    y_vertex,
)
from convex_steiner.solvers.results import build_result
from convex_steiner.solvers.steiner_dp import solve_subset_y, sweep_subset_y
from convex_steiner.solvers.steiner_greedy import solve_all_y


def interval_to_convex_bipartite(model):
    """Build the convex bipartite image of an interval family.

    X holds the sorted distinct endpoint values; interval v_i becomes y_i adjacent to
    every value it contains.

    Args:
        model (IntervalGraphModel): Interval family.

    Returns:
        tuple: (ConvexBipartiteGraph, vertex_map) where vertex_map sends interval
            vertex i to its Y vertex.

    Raises:
        ValueError: If the family is empty.
        DisconnectedGraphError: If the intersection graph is not connected.
    """
    if model.n == 0:
        error_msg = "The interval family must not be empty."
        raise ValueError(error_msg)
    values = sorted({endpoint for interval in model.intervals for endpoint in interval})
    position = {value: k for k, value in enumerate(values, start=1)}
    graph = ConvexBipartiteGraph(
        m=len(values),
        intervals=tuple(
            (position[left], position[right]) for left, right in model.intervals
        ),
    )
    require_connected(graph)
    return graph, {i: y_vertex(i) for i in range(1, model.n + 1)}


def solve_interval_steiner(model, terminals):
    """Compute a minimum Steiner set of an interval graph.

    The terminal intervals are solved on the convex bipartite image (solve_all_y
    when every interval is terminal, solve_subset_y otherwise) and the Y part of the
    image solution is projected back. The projection is compared with the sweep
    that treats X positions as free; if the sweep needs fewer intervals its witness
    is projected instead and the trace flags the gap.

    Args:
        model (IntervalGraphModel): Interval family with connected intersection
            graph.
        terminals (iterable of int): Terminal interval vertices.

    Returns:
        SteinerResult: Steiner set of interval vertices.

    Raises:
        InfeasibleTerminalsError: If terminals is empty.
        IndexError: If a terminal is out of range.
    """
    graph, vertex_map = interval_to_convex_bipartite(model)
    terminals = sorted(set(terminals))
    _validate_interval_terminals(model, terminals)
    if len(terminals) == 1:
        return build_result(model, terminals, (), (), "interval")
    if len(terminals) == model.n:
        image = solve_all_y(graph)
        projected = set()
        trace = [{"stage": "image", "algorithm": image.algorithm}]
    else:
        image = solve_subset_y(graph, terminals)
        projected = {v.index for v in image.steiner_set if v.side == "y"}
        sweep = sweep_subset_y(graph, terminals, count_points=False)
        gap = sweep.optimum < len(projected)
        trace = [
            {
                "stage": "image",
                "algorithm": image.algorithm,
                "image_set": sorted(map(str, image.steiner_set)),
                "projected_size": len(projected),
                "sweep_size": sweep.optimum,
                "projection_gap": gap,
            }
        ]
        if gap:
            projected = {v.index for v in sweep.witness if v.side == "y"}
    trace.append({"stage": "vertex_map", "size": len(vertex_map)})
    return build_result(model, terminals, projected, trace, "interval")


def _validate_interval_terminals(model, terminals):
    if not terminals:
        error_msg = "The terminal set must be nonempty."
        raise InfeasibleTerminalsError(error_msg)
    if terminals[0] < 1 or terminals[-1] > model.n:
        error_msg = f"Terminal intervals must lie in 1..{model.n}."
        raise IndexError(error_msg)
