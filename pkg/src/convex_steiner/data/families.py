"""This script deploys the seeded instance families of the acceptance experiments.

Each family is a pandas DataFrame with one row per trial, so the pytask tasks can
pickle it and the harness can replay it row by row.
"""

import numpy as np
import pandas as pd

from convex_steiner.data.generators import (
    GenConfig,
    gen_convex_bipartite,
    gen_general_graph,
    gen_interval_family,
    gen_terminals,
)
from convex_steiner.graphs.graph_core import (
    ConvexBipartiteGraph,
    GeneralGraph,
    IntervalGraphModel,
)

pd.options.mode.copy_on_write = True


def sweep_family(seed, trials, max_m, max_n, densities, cases):
    """Random convex bipartite instances cycling through the terminal cases.

    Args:
        seed (int): Base seed; trial seeds are spawned from it.
        trials (int): Number of instances.
        max_m (int): Largest X side.
        max_n (int): Largest Y side.
        densities (list of float): Interval length fractions to draw from.
        cases (list of str): Terminal cases, used round robin.

    Returns:
        pd.DataFrame: Columns trial, seed, case, m, intervals, x_terminals and
            y_terminals.
    """
    rows = []
    for trial, rng, trial_seed in _trial_streams(seed, trials):
        case = cases[trial % len(cases)]
        m = int(rng.integers(1, max_m + 1))
        n = int(rng.integers(1, max_n + 1))
        if case == "subset_x":
            m = max(m, 2)
        if case == "subset_y":
            n = max(n, 2)
        cfg = GenConfig(seed=trial_seed, m=m, n=n, density=float(rng.choice(densities)))
        graph = gen_convex_bipartite(cfg)
        terminal_spec = gen_terminals(graph, case, trial_seed)
        rows.append(
            {
                "trial": trial,
                "seed": trial_seed,
                "case": case,
                "m": graph.m,
                "intervals": graph.intervals,
                "x_terminals": tuple(sorted(terminal_spec.x_terminals)),
                "y_terminals": tuple(sorted(terminal_spec.y_terminals)),
            }
        )
    return pd.DataFrame(rows)


def interval_family(seed, trials, max_n):
    """Random connected interval families with random nonempty terminal sets.

    Returns:
        pd.DataFrame: Columns trial, seed, intervals and terminals.
    """
    rows = []
    for trial, rng, trial_seed in _trial_streams(seed, trials):
        n = int(rng.integers(1, max_n + 1))
        model = gen_interval_family(
            GenConfig(seed=trial_seed, m=2 * n, n=n, density=0.25)
        )
        size = int(rng.integers(1, n + 1))
        terminals = sorted(int(v) + 1 for v in rng.choice(n, size=size, replace=False))
        rows.append(
            {
                "trial": trial,
                "seed": trial_seed,
                "intervals": model.intervals,
                "terminals": tuple(terminals),
            }
        )
    return pd.DataFrame(rows)


def vc_family(seed, trials, max_vertices, max_edges):
    """Random graphs with at least one and at most max_edges edges.

    Returns:
        pd.DataFrame: Columns trial, seed, vertex_count and edges.
    """
    rows = []
    for trial, rng, trial_seed in _trial_streams(seed, trials):
        vertex_count = int(rng.integers(2, max_vertices + 1))
        probability = float(rng.uniform(0.2, 0.7))
        graph = gen_general_graph(trial_seed, vertex_count, probability, max_edges)
        rows.append(
            {
                "trial": trial,
                "seed": trial_seed,
                "vertex_count": graph.vertex_count,
                "edges": graph.edges,
            }
        )
    return pd.DataFrame(rows)


def domination_family(seed, trials, max_m, max_n):
    """Random connected convex bipartite graphs for the domination audit.

    Returns:
        pd.DataFrame: Columns trial, seed, m and intervals.
    """
    rows = []
    for trial, rng, trial_seed in _trial_streams(seed, trials):
        m = int(rng.integers(1, max_m + 1))
        n = int(rng.integers(1, max_n + 1))
        graph = gen_convex_bipartite(GenConfig(seed=trial_seed, m=m, n=n))
        rows.append(
            {
                "trial": trial,
                "seed": trial_seed,
                "m": graph.m,
                "intervals": graph.intervals,
            }
        )
    return pd.DataFrame(rows)


def scaling_family(seed, sizes, density):
    """Connected instances with n = m and a random proper subset of Y as terminals.

    Returns:
        pd.DataFrame: Columns m, n, seed, intervals and y_terminals.
    """
    rows = []
    streams = _trial_streams(seed, len(sizes))
    for (_, _, trial_seed), m in zip(streams, sizes, strict=True):
        cfg = GenConfig(seed=trial_seed, m=m, n=m, density=density)
        graph = gen_convex_bipartite(cfg)
        terminal_spec = gen_terminals(graph, "subset_y", trial_seed)
        rows.append(
            {
                "m": m,
                "n": m,
                "seed": trial_seed,
                "intervals": graph.intervals,
                "y_terminals": tuple(sorted(terminal_spec.y_terminals)),
            }
        )
    return pd.DataFrame(rows)


def convex_graph_from_row(row):
    return ConvexBipartiteGraph(m=int(row.m), intervals=tuple(row.intervals))


def interval_model_from_row(row):
    return IntervalGraphModel(intervals=tuple(row.intervals))


def general_graph_from_row(row):
    return GeneralGraph(vertex_count=int(row.vertex_count), edges=tuple(row.edges))


def _trial_streams(seed, trials):
    """Yield (trial, generator, trial seed) from independent spawned seed streams."""
    for trial, child in enumerate(np.random.SeedSequence(seed).spawn(trials)):
        trial_seed = int(child.generate_state(1)[0])
        yield trial, np.random.default_rng(child), trial_seed
