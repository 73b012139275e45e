"""This script deploys seeded random generators for graphs and terminal sets."""

from dataclasses import dataclass

import networkx as nx
import numpy as np

from convex_steiner.errors import InfeasibleTerminalsError
from convex_steiner.graphs.graph_core import (
    ConvexBipartiteGraph,
    GeneralGraph,
    IntervalGraphModel,
    TerminalCase,
    classify_terminals,
)


@dataclass(frozen=True)
class GenConfig:
    """Parameters of a random instance.

    Attributes:
        seed (int): Seed of the numpy generator.
        m (int): Number of X positions (coordinate span for interval families).
        n (int): Number of intervals.
        density (float): Target mean interval length as a fraction of m, in (0, 1].
        connect (bool): Whether to repair the instance to connectivity.
    """

    seed: int
    m: int
    n: int
    density: float = 0.35
    connect: bool = True


def gen_convex_bipartite(cfg):
    """Draw a random convex bipartite graph.

    Args:
        cfg (GenConfig): Generator parameters with m, n >= 1.

    Returns:
        ConvexBipartiteGraph: n intervals in [1, m], connected if cfg.connect.
    """
    _validate_config(cfg)
    rng = np.random.default_rng(cfg.seed)
    intervals = _draw_intervals(rng, cfg.m, cfg.n, cfg.density)
    if cfg.connect:
        _repair(rng, intervals, cfg.m)
    return ConvexBipartiteGraph(m=cfg.m, intervals=tuple(map(tuple, intervals)))


def gen_interval_family(cfg):
    """Draw a random integer interval family over the coordinates 1..m.

    Args:
        cfg (GenConfig): Generator parameters with m, n >= 1.

    Returns:
        IntervalGraphModel: n intervals, with connected intersection graph if
            cfg.connect.
    """
    _validate_config(cfg)
    rng = np.random.default_rng(cfg.seed)
    intervals = _draw_intervals(rng, cfg.m, cfg.n, cfg.density)
    if cfg.connect:
        _repair(rng, intervals, cfg.m)
    return IntervalGraphModel(intervals=tuple(map(tuple, intervals)))


def gen_general_graph(seed, vertex_count, edge_probability=0.4, max_edges=None):
    """Draw a G(n, p) graph with at least one edge.

    When max_edges is given and exceeded, a seeded random sample of max_edges edges
    is kept.

    Args:
        seed (int): Seed of the networkx generator.
        vertex_count (int): Number of vertices, at least 2.
        edge_probability (float): Edge probability.
        max_edges (int, optional): Edge cap.

    Returns:
        GeneralGraph: Graph on vertices 1..vertex_count.

    Raises:
        ValueError: If vertex_count is smaller than 2 or max_edges is below 1.
    """
    if vertex_count < 2:
        error_msg = "A graph with an edge needs at least two vertices."
        raise ValueError(error_msg)
    if max_edges is not None and max_edges < 1:
        error_msg = f"max_edges must be at least 1, got {max_edges}."
        raise ValueError(error_msg)
    drawn = nx.gnp_random_graph(vertex_count, edge_probability, seed=seed)
    pairs = sorted((u + 1, v + 1) for u, v in drawn.edges)
    if max_edges is not None and len(pairs) > max_edges:
        rng = np.random.default_rng(seed)
        keep = rng.choice(len(pairs), size=max_edges, replace=False)
        pairs = sorted(pairs[k] for k in keep)
    if not pairs:
        pairs = [(1, 2)]
    return GeneralGraph(vertex_count=vertex_count, edges=tuple(pairs))


def gen_terminals(graph, case, seed):
    """Draw a uniformly random terminal set of the requested case.

    Args:
        graph (ConvexBipartiteGraph): Host graph.
        case (str | TerminalCase): One of all_x, subset_x, all_y, subset_y, mixed.
        seed (int): Seed of the numpy generator.

    Returns:
        TerminalSpec: The terminal sets.

    Raises:
        InfeasibleTerminalsError: If the case is impossible for the graph size.
    """
    case = TerminalCase(case)
    _validate_case(graph, case)
    rng = np.random.default_rng(seed)
    xs, ys = (), ()
    if case is TerminalCase.ALL_X:
        xs = range(1, graph.m + 1)
    elif case is TerminalCase.SUBSET_X:
        xs = _sample(rng, graph.m, 1, graph.m - 1)
    elif case is TerminalCase.ALL_Y:
        ys = range(1, graph.n + 1)
    elif case is TerminalCase.SUBSET_Y:
        ys = _sample(rng, graph.n, 1, graph.n - 1)
    else:
        xs = _sample(rng, graph.m, 1, graph.m)
        ys = _sample(rng, graph.n, 1, graph.n)
    return classify_terminals(graph, xs, ys)


def _sample(rng, population, low, high):
    """Draw a size in low..high, then that many distinct ids of 1..population."""
    size = int(rng.integers(low, high + 1))
    return sorted(int(v) for v in rng.choice(population, size=size, replace=False) + 1)


def _draw_intervals(rng, m, n, density):
    mean_length = max(1.0, density * m)
    lengths = np.clip(rng.poisson(mean_length - 1, size=n) + 1, 1, m)
    intervals = []
    for length in lengths:
        left = int(rng.integers(1, m - length + 2))
        intervals.append([left, left + int(length) - 1])
    return intervals


def _first_cut(intervals, m):
    """Return the smallest p with no interval containing both p and p+1, or None."""
    spanned = [False] * (m + 1)
    for left, right in intervals:
        for p in range(left, right):
            spanned[p] = True
    return next((p for p in range(1, m) if not spanned[p]), None)


def _repair(rng, intervals, m):
    """Widen intervals one position at a time until no cut is left.

    Each step picks uniformly among the intervals nearest to the first cut and
    stretches it towards the cut.
    """
    cut = _first_cut(intervals, m)
    while cut is not None:
        distances = [
            cut + 1 - right if right <= cut else left - cut
            for left, right in intervals
        ]
        nearest = [k for k, d in enumerate(distances) if d == min(distances)]
        chosen = intervals[int(rng.choice(nearest))]
        if chosen[1] <= cut:
            chosen[1] += 1
        else:
            chosen[0] -= 1
        cut = _first_cut(intervals, m)


def _validate_config(cfg):
    if not isinstance(cfg, GenConfig):
        error_msg = f"cfg must be a GenConfig, got {type(cfg).__name__}."
        raise TypeError(error_msg)
    if cfg.m < 1 or cfg.n < 1:
        error_msg = "GenConfig needs m >= 1 and n >= 1."
        raise ValueError(error_msg)
    if not 0 < cfg.density <= 1:
        error_msg = "density must lie in (0, 1]."
        raise ValueError(error_msg)


def _validate_case(graph, case):
    needs = {
        TerminalCase.SUBSET_X: graph.m >= 2,
        TerminalCase.SUBSET_Y: graph.n >= 2,
        TerminalCase.ALL_Y: graph.n >= 1,
        TerminalCase.MIXED: graph.n >= 1,
    }
    if not needs.get(case, True):
        error_msg = f"Case {case.value} is infeasible for m={graph.m}, n={graph.n}."
        raise InfeasibleTerminalsError(error_msg)
