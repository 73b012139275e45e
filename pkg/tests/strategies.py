"""Hypothesis strategies and worked instances shared by the tests."""

from hypothesis import strategies as st

from convex_steiner.graphs.graph_core import (
    ConvexBipartiteGraph,
    GeneralGraph,
    IntervalGraphModel,
)

FIG1 = ConvexBipartiteGraph(m=4, intervals=((1, 2), (1, 3), (2, 4), (3, 4)))
FIG2 = ConvexBipartiteGraph(
    m=13,
    intervals=(
        (1, 3),
        (2, 4),
        (3, 4),
        (3, 5),
        (5, 6),
        (6, 8),
        (6, 10),
        (9, 11),
        (10, 12),
        (11, 13),
    ),
)
FIG2_TERMINALS = (1, 3, 4, 6, 8, 11, 12, 13)
TABLE1 = ConvexBipartiteGraph(m=8, intervals=((1, 2), (2, 4), (4, 6), (4, 7), (7, 8)))
DP_TRACE = ConvexBipartiteGraph(
    m=7, intervals=((1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (2, 7))
)
DP_TRACE_TERMINALS = (1, 3, 5)
PATH3 = ConvexBipartiteGraph(m=3, intervals=((1, 2), (2, 3)))
TRIANGLE = GeneralGraph(vertex_count=3, edges=((1, 2), (2, 3), (1, 3)))


@st.composite
def convex_graphs(draw, max_m=8, max_n=6):
    """Convex bipartite graphs with valid intervals, connected or not."""
    m = draw(st.integers(1, max_m))
    n = draw(st.integers(1, max_n))
    intervals = []
    for _ in range(n):
        left = draw(st.integers(1, m))
        right = draw(st.integers(left, m))
        intervals.append((left, right))
    return ConvexBipartiteGraph(m=m, intervals=tuple(intervals))


@st.composite
def connected_convex_graphs(draw, max_m=8, max_n=6):
    """Connected convex bipartite graphs; a spanning chain is drawn first."""
    m = draw(st.integers(1, max_m))
    intervals = []
    reached = 1
    while reached < m or not intervals:
        right = draw(st.integers(min(reached + 1, m), m))
        left = draw(st.integers(1, reached))
        intervals.append((left, right))
        reached = right
    extra = draw(st.integers(0, max(0, max_n - len(intervals))))
    for _ in range(extra):
        left = draw(st.integers(1, m))
        right = draw(st.integers(left, m))
        intervals.append((left, right))
    order = draw(st.permutations(range(len(intervals))))
    return ConvexBipartiteGraph(m=m, intervals=tuple(intervals[k] for k in order))


@st.composite
def interval_models(draw, max_n=6, span=12):
    n = draw(st.integers(1, max_n))
    intervals = []
    for _ in range(n):
        left = draw(st.integers(-span, span))
        right = draw(st.integers(left, span))
        intervals.append((left, right))
    return IntervalGraphModel(intervals=tuple(intervals))


@st.composite
def general_graphs(draw, max_vertices=6):
    vertex_count = draw(st.integers(2, max_vertices))
    pairs = [
        (u, v)
        for u in range(1, vertex_count + 1)
        for v in range(u + 1, vertex_count + 1)
    ]
    chosen = draw(st.lists(st.sampled_from(pairs), min_size=1, unique=True))
    return GeneralGraph(vertex_count=vertex_count, edges=tuple(sorted(chosen)))
