"""This script deploys the pendant lift that turns mixed terminal sets into Y-only
terminal sets."""

from dataclasses import dataclass

from convex_steiner.errors import InfeasibleTerminalsError
from convex_steiner.graphs.graph_core import (
    ConvexBipartiteGraph,
    require_connected,
    y_vertex,
)


@dataclass(frozen=True)
class MixedLift:
    """Lifted graph with one pendant Y vertex per terminal X position.

    Attributes:
        lifted_graph (ConvexBipartiteGraph): Original intervals followed by the
            pendant intervals (z_i, z_i).
        pendant_map (dict): Terminal X position to the Y index of its pendant.
    """

    lifted_graph: ConvexBipartiteGraph
    pendant_map: dict

    @property
    def pendants(self):
        return frozenset(y_vertex(i) for i in self.pendant_map.values())


def lift_mixed_terminals(graph, x_terminals, y_terminals=()):
    """Attach a pendant Y vertex to every terminal X position.

    Args:
        graph (ConvexBipartiteGraph): Connected convex bipartite graph.
        x_terminals (iterable of int): Terminal X positions, nonempty.
        y_terminals (iterable of int): Terminal Y indices, possibly empty.

    Returns:
        tuple: (MixedLift, lifted terminal Y indices R*).

    Raises:
        InfeasibleTerminalsError: If x_terminals is empty.
        IndexError: If a terminal is out of range.
    """
    require_connected(graph)
    positions = sorted(set(x_terminals))
    indices = sorted(set(y_terminals))
    _validate_lift_terminals(graph, positions, indices)
    pendant_map = {p: graph.n + k for k, p in enumerate(positions, start=1)}
    lifted = ConvexBipartiteGraph(
        m=graph.m, intervals=graph.intervals + tuple((p, p) for p in positions)
    )
    lifted_terminals = frozenset(indices) | frozenset(pendant_map.values())
    return MixedLift(lifted_graph=lifted, pendant_map=pendant_map), lifted_terminals


def _validate_lift_terminals(graph, positions, indices):
    if not positions:
        error_msg = "The lift needs at least one terminal X position."
        raise InfeasibleTerminalsError(error_msg)
    if positions[0] < 1 or positions[-1] > graph.m:
        error_msg = f"Terminal positions must lie in 1..{graph.m}."
        raise IndexError(error_msg)
    if indices and (indices[0] < 1 or indices[-1] > graph.n):
        error_msg = f"Terminal indices must lie in 1..{graph.n}."
        raise IndexError(error_msg)
