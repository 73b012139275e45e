"""This script deploys exhaustive baselines for Steiner sets, vertex covers and
dominating sets.

Every search enumerates candidate sets by increasing cardinality in lexicographic
order of the sorted vertices, so the first feasible set is an optimum and the
witness is the lexicographically least one. Vertex sets are handled as bit masks.
"""

import itertools
from dataclasses import dataclass

import networkx as nx

from convex_steiner.config import (
    ORACLE_MAX_COVER_VERTICES,
    ORACLE_MAX_DOMINATING_VERTICES,
    ORACLE_MAX_STEINER_CANDIDATES,
)
from convex_steiner.errors import (
    DisconnectedGraphError,
    InfeasibleTerminalsError,
    OracleScaleError,
)
from convex_steiner.graphs.graph_core import as_networkx


@dataclass(frozen=True)
class OracleResult:
    """Outcome of an exhaustive search.

    Attributes:
        optimum (int): Size of the smallest feasible set.
        witness (frozenset): Lexicographically least feasible set of that size.
        explored (int): Number of candidate sets examined.
    """

    optimum: int
    witness: frozenset
    explored: int


def min_steiner_brute(graph, terminals, max_candidates=ORACLE_MAX_STEINER_CANDIDATES):
    """Find a minimum Steiner set by enumerating subsets of the non-terminals.

    Args:
        graph (ConvexBipartiteGraph | GeneralGraph | IntervalGraphModel | nx.Graph):
            Connected host graph.
        terminals (iterable): Terminal vertices.
        max_candidates (int): Size guard on the number of non-terminal vertices.

    Returns:
        OracleResult: Minimum Steiner set size and witness.

    Raises:
        OracleScaleError: If the graph has more than max_candidates non-terminals.
        InfeasibleTerminalsError: If terminals is empty or holds unknown vertices.
        DisconnectedGraphError: If the graph is not connected.
    """
    host = as_networkx(graph)
    terminals = set(terminals)
    _validate_terminals(host, terminals)
    _validate_scale(len(host) - len(terminals), max_candidates, "non-terminal")
    if not nx.is_connected(host):
        error_msg = "The oracle requires a connected graph."
        raise DisconnectedGraphError(error_msg)
    nodes, bit, adjacency = _bit_encoding(host)
    terminal_mask = _mask_of(terminals, bit)
    candidates = [v for v in nodes if v not in terminals]
    explored = 0
    for size in range(len(candidates) + 1):
        for combo in itertools.combinations(candidates, size):
            explored += 1
            if _mask_connected(terminal_mask | _mask_of(combo, bit), adjacency):
                return OracleResult(size, frozenset(combo), explored)
    error_msg = "No Steiner set found in a connected graph."
    raise AssertionError(error_msg)


def min_vertex_cover_brute(graph, max_vertices=ORACLE_MAX_COVER_VERTICES):
    """Find a minimum vertex cover.

    Args:
        graph (GeneralGraph | nx.Graph): Graph to cover.
        max_vertices (int): Size guard on the number of vertices.

    Returns:
        OracleResult: Minimum cover size and witness.

    Raises:
        OracleScaleError: If the graph has more than max_vertices vertices.
    """
    host = as_networkx(graph)
    _validate_scale(len(host), max_vertices)
    nodes, bit, _ = _bit_encoding(host)
    edge_masks = [bit[u] | bit[v] for u, v in host.edges]
    explored = 0
    for size in range(len(nodes) + 1):
        for combo in itertools.combinations(nodes, size):
            explored += 1
            mask = _mask_of(combo, bit)
            if all(edge & mask for edge in edge_masks):
                return OracleResult(size, frozenset(combo), explored)
    error_msg = "The full vertex set is always a cover."
    raise AssertionError(error_msg)


def min_dominating_brute(graph, max_vertices=ORACLE_MAX_DOMINATING_VERTICES):
    """Find a minimum dominating set.

    Args:
        graph (ConvexBipartiteGraph | GeneralGraph | IntervalGraphModel | nx.Graph):
            Graph to dominate.
        max_vertices (int): Size guard on the number of vertices.

    Returns:
        OracleResult: Minimum dominating set size and witness.

    Raises:
        OracleScaleError: If the graph has more than max_vertices vertices.
    """
    host = as_networkx(graph)
    _validate_scale(len(host), max_vertices)
    nodes, bit, adjacency = _bit_encoding(host)
    full = (1 << len(nodes)) - 1
    closed = [adjacency[k] | (1 << k) for k in range(len(nodes))]
    explored = 0
    for size in range(len(nodes) + 1):
        for combo in itertools.combinations(nodes, size):
            explored += 1
            covered = 0
            for v in combo:
                covered |= closed[bit[v].bit_length() - 1]
            if covered == full:
                return OracleResult(size, frozenset(combo), explored)
    error_msg = "The full vertex set always dominates."
    raise AssertionError(error_msg)


def is_vertex_cover(graph, cover):
    """Check that every edge has an endpoint in cover."""
    cover = set(cover)
    return all(u in cover or v in cover for u, v in as_networkx(graph).edges)


def is_dominating_set(graph, dominating):
    """Check that every vertex is in dominating or adjacent to it."""
    host = as_networkx(graph)
    dominating = set(dominating)
    if not dominating <= set(host.nodes):
        return False
    return nx.is_dominating_set(host, dominating)


def _bit_encoding(host):
    """Assign bit k to the k-th sorted vertex and build neighbor masks."""
    nodes = sorted(host.nodes)
    bit = {v: 1 << k for k, v in enumerate(nodes)}
    adjacency = [_mask_of(host[v], bit) for v in nodes]
    return nodes, bit, adjacency


def _mask_of(vertices, bit):
    mask = 0
    for v in vertices:
        mask |= bit[v]
    return mask


def _mask_connected(mask, adjacency):
    """Check whether the vertices in mask induce a connected subgraph."""
    if mask == 0:
        return True
    reached = mask & -mask
    frontier = reached
    while frontier:
        lowest = frontier & -frontier
        frontier ^= lowest
        grown = adjacency[lowest.bit_length() - 1] & mask & ~reached
        reached |= grown
        frontier |= grown
    return reached == mask


def _validate_scale(count, limit, kind=""):
    if count > limit:
        noun = f"{kind} vertices".strip()
        error_msg = f"The oracle is limited to {limit} {noun}, got {count}."
        raise OracleScaleError(error_msg)


def _validate_terminals(host, terminals):
    if not terminals:
        error_msg = "The terminal set must be nonempty."
        raise InfeasibleTerminalsError(error_msg)
    unknown = [v for v in terminals if v not in host]
    if unknown:
        error_msg = f"Unknown terminal(s): {sorted(map(str, unknown))}."
        raise InfeasibleTerminalsError(error_msg)
