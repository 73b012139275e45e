"""This script deploys the result type shared by every Steiner solver."""

from dataclasses import dataclass

import networkx as nx

from convex_steiner.graphs.graph_core import as_networkx, induced_connected


@dataclass(frozen=True)
class SteinerResult:
    """A Steiner set with the decision trace and witness tree that produced it.

    Attributes:
        steiner_set (frozenset): Steiner vertices, disjoint from the terminals.
        trace (tuple of dict): Ordered decision log of the solver.
        tree_edges (tuple of tuple): Spanning tree of the subgraph induced by the
            terminals and the Steiner set.
        algorithm (str): Name of the solver that produced the set.
    """

    steiner_set: frozenset
    trace: tuple
    tree_edges: tuple
    algorithm: str

    @property
    def size(self):
        return len(self.steiner_set)


def witness_tree(graph, vertex_set):
    """Return the BFS tree edges of the subgraph induced by vertex_set.

    The traversal starts at the smallest vertex so the edge list is deterministic.

    Args:
        graph (ConvexBipartiteGraph | GeneralGraph | IntervalGraphModel | nx.Graph):
            Host graph.
        vertex_set (iterable): Vertices inducing a connected subgraph.

    Returns:
        tuple of tuple: Tree edges as (parent, child) pairs.
    """
    chosen = sorted(set(vertex_set))
    if len(chosen) <= 1:
        return ()
    induced = as_networkx(graph).subgraph(chosen)
    return tuple(nx.bfs_edges(induced, chosen[0], sort_neighbors=sorted))


def verify_steiner_certificate(graph, terminals, steiner_set, budget=None):
    """Check a certificate of the decision version of the Steiner tree problem.

    Args:
        graph (ConvexBipartiteGraph | GeneralGraph | IntervalGraphModel | nx.Graph):
            Host graph.
        terminals (iterable): Terminal vertices.
        steiner_set (iterable): Candidate Steiner vertices.
        budget (int, optional): Largest admissible Steiner set size.

    Returns:
        bool: True iff the sets are disjoint, their union induces a connected
            subgraph and the budget (if any) is respected.
    """
    terminals = set(terminals)
    steiner_set = set(steiner_set)
    if terminals & steiner_set:
        return False
    if budget is not None and len(steiner_set) > budget:
        return False
    if not terminals | steiner_set:
        return True
    return induced_connected(graph, terminals | steiner_set)


def build_result(graph, terminals, steiner_set, trace, algorithm):
    """Check the Steiner invariants and package a solver outcome.

    Raises:
        AssertionError: If the set overlaps the terminals or leaves them
            disconnected.
    """
    steiner_set = frozenset(steiner_set)
    if not verify_steiner_certificate(graph, terminals, steiner_set):
        error_msg = (
            f"{algorithm} produced an invalid Steiner set "
            f"{sorted(map(str, steiner_set))}."
        )
        raise AssertionError(error_msg)
    return SteinerResult(
        steiner_set=steiner_set,
        trace=tuple(trace),
        tree_edges=witness_tree(graph, set(terminals) | steiner_set),
        algorithm=algorithm,
    )
