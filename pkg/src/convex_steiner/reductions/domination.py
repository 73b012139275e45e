"""This script deploys the dominating set built from the R=X and R=Y Steiner sets."""

from convex_steiner.graphs.graph_core import require_connected, x_vertex
from convex_steiner.oracle.oracle import is_dominating_set
from convex_steiner.solvers.steiner_greedy import solve_all_x, solve_all_y


def dominating_set_via_stree(graph):
    """Union of the Steiner sets for R=X and R=Y.

    The union is always checked to dominate the graph; its size is not claimed to
    be minimum. When both Steiner sets are empty (a single edge x_1 y_1) the set
    {x_1} is returned.

    Args:
        graph (ConvexBipartiteGraph): Connected convex bipartite graph with m, n >= 1.

    Returns:
        frozenset of Vertex: A dominating set.

    Raises:
        ValueError: If the graph has no Y vertex.
        AssertionError: If the union fails to dominate the graph.
    """
    require_connected(graph)
    if graph.n < 1:
        error_msg = "The graph needs at least one Y vertex."
        raise ValueError(error_msg)
    dominating = solve_all_x(graph).steiner_set | solve_all_y(graph).steiner_set
    if not dominating:
        dominating = frozenset({x_vertex(1)})
    if not is_dominating_set(graph, dominating):
        error_msg = f"{sorted(map(str, dominating))} does not dominate the graph."
        raise AssertionError(error_msg)
    return dominating
