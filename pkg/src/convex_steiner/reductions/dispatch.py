"""This script deploys the solver that routes any terminal set to the right
algorithm."""

import networkx as nx

from convex_steiner.errors import InfeasibleTerminalsError
from convex_steiner.graphs.graph_core import (
    TerminalCase,
    as_networkx,
    classify_terminals,
    require_connected,
    x_vertex,
    y_vertex,
)
from convex_steiner.reductions.mixed import lift_mixed_terminals
from convex_steiner.solvers.results import build_result
from convex_steiner.solvers.steiner_dp import solve_subset_y
from convex_steiner.solvers.steiner_greedy import (
    solve_all_x,
    solve_all_y,
    solve_subset_x,
)


def solve_general(graph, terminals):
    """Compute a minimum Steiner set for any nonempty terminal set.

    R=X uses solve_all_x, a proper subset of X uses solve_subset_x, R=Y uses
    solve_all_y, a proper subset of Y uses solve_subset_y and mixed terminal sets
    go through solve_mixed.

    Args:
        graph (ConvexBipartiteGraph): Connected convex bipartite graph.
        terminals (iterable of Vertex): Terminal vertices.

    Returns:
        SteinerResult: Minimum Steiner set of the routed solver.

    Raises:
        InfeasibleTerminalsError: If terminals is empty.
        DisconnectedGraphError: If the graph is not connected.
    """
    require_connected(graph)
    terminals = set(terminals)
    terminal_spec = classify_terminals(
        graph,
        x_terminals=[v.index for v in terminals if v.side == "x"],
        y_terminals=[v.index for v in terminals if v.side == "y"],
    )
    if len(terminals) == 1:
        return build_result(graph, terminals, (), (), "trivial")
    if terminal_spec.case is TerminalCase.ALL_X:
        return solve_all_x(graph)
    if terminal_spec.case is TerminalCase.SUBSET_X:
        return solve_subset_x(graph, terminal_spec.x_terminals)
    if terminal_spec.case is TerminalCase.ALL_Y:
        return solve_all_y(graph)
    if terminal_spec.case is TerminalCase.SUBSET_Y:
        return solve_subset_y(graph, terminal_spec.y_terminals)
    return solve_mixed(graph, terminal_spec.x_terminals, terminal_spec.y_terminals)


def solve_mixed(graph, x_terminals, y_terminals):
    """Solve a mixed terminal set on the pendant lift and project back.

    Every terminal X position ends up in the lifted solution because its pendant
    has no other neighbor; removing the terminals leaves the Steiner set of the
    original instance.

    Args:
        graph (ConvexBipartiteGraph): Connected convex bipartite graph.
        x_terminals (iterable of int): Terminal X positions, nonempty.
        y_terminals (iterable of int): Terminal Y indices.

    Returns:
        SteinerResult: Steiner set of the original instance.
    """
    lift, lifted_terminals = lift_mixed_terminals(graph, x_terminals, y_terminals)
    lifted = lift.lifted_graph
    terminals = {x_vertex(p) for p in lift.pendant_map} | {
        y_vertex(i) for i in y_terminals
    }
    if len(lifted_terminals) == 1:
        return build_result(graph, terminals, (), (), "mixed")
    if len(lifted_terminals) == lifted.n:
        inner = solve_all_y(lifted)
    else:
        inner = solve_subset_y(lifted, lifted_terminals)
    if inner.steiner_set & lift.pendants:
        error_msg = "A pendant of the lift entered the Steiner set."
        raise AssertionError(error_msg)
    trace = [
        {
            "stage": "lift",
            "pendants": {str(p): i for p, i in lift.pendant_map.items()},
            "inner_algorithm": inner.algorithm,
            "inner_set": sorted(map(str, inner.steiner_set)),
        },
        *inner.trace,
    ]
    return build_result(graph, terminals, inner.steiner_set - terminals, trace, "mixed")


def solve_two_terminals(graph, source, target):
    """Connect two terminals along a shortest path.

    Args:
        graph (ConvexBipartiteGraph | GeneralGraph | IntervalGraphModel | nx.Graph):
            Connected host graph.
        source: First terminal.
        target: Second terminal.

    Returns:
        SteinerResult: Interior vertices of a shortest path.

    Raises:
        InfeasibleTerminalsError: If source equals target or is unknown.
    """
    host = as_networkx(graph)
    if source == target or source not in host or target not in host:
        error_msg = "Two distinct terminals of the graph are required."
        raise InfeasibleTerminalsError(error_msg)
    path = nx.shortest_path(host, source, target)
    trace = [{"path": [str(v) for v in path]}]
    return build_result(host, {source, target}, path[1:-1], trace, "two_terminals")
