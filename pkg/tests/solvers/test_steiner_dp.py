import json
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from convex_steiner.errors import DisconnectedGraphError, InfeasibleTerminalsError
from convex_steiner.graphs.graph_core import ConvexBipartiteGraph, y_vertex
from convex_steiner.oracle.oracle import min_steiner_brute
from convex_steiner.solvers.results import verify_steiner_certificate
from convex_steiner.solvers.steiner_dp import (
    classify,
    compute_table,
    indicator,
    prune,
    reconstruct,
    sigma_order,
    solve_subset_y,
    sweep_subset_y,
    table_dump,
    table_value,
)
from tests.strategies import (
    DP_TRACE,
    DP_TRACE_TERMINALS,
    FIG1,
    connected_convex_graphs,
)

PATCHED_RUN = ConvexBipartiteGraph(
    m=10, intervals=((1, 2), (2, 3), (4, 5), (5, 6), (6, 7), (9, 10), (2, 10))
)
PATCHED_RUN_TERMINALS = (1, 2, 3, 4, 5, 6)
CONNECTOR_CHAIN = ConvexBipartiteGraph(m=6, intervals=((1, 2), (2, 4), (4, 6)))
SHARED_ENDPOINT = ConvexBipartiteGraph(m=5, intervals=((1, 3), (3, 5), (1, 5)))
TABLE_GAP = ConvexBipartiteGraph(
    m=7, intervals=((1, 2), (2, 4), (4, 6), (6, 7), (1, 7))
)


def _labels(vertices):
    return sorted(map(str, vertices))


# Tests for sigma_order
def test_sigma_order_longer_interval_first_on_equal_left():
    assert sigma_order(DP_TRACE).order == (1, 6, 2, 3, 4, 5)


def test_sigma_order_is_stable_on_full_ties():
    graph = ConvexBipartiteGraph(m=3, intervals=((2, 3), (1, 3), (2, 3)))
    assert sigma_order(graph).order == (2, 1, 3)


# Tests for indicator
def test_indicator_marks_non_terminals():
    assert indicator(DP_TRACE, DP_TRACE_TERMINALS) == {
        1: 0,
        2: 1,
        3: 0,
        4: 1,
        5: 0,
        6: 1,
    }


# Tests for prune
def test_prune_drops_intervals_left_of_first_terminal():
    graph = ConvexBipartiteGraph(m=6, intervals=((1, 2), (2, 4), (3, 6), (4, 5)))
    offset, length, windowed = prune(graph, [3, 4])
    assert offset == 3
    assert length == 4
    assert windowed == {2: (1, 2), 3: (1, 4), 4: (2, 3)}


@pytest.mark.parametrize(
    ("terminals", "error", "match"),
    [
        ([], InfeasibleTerminalsError, "nonempty"),
        ([7], IndexError, "1..6"),
        ([1, 2, 3, 4, 5, 6], InfeasibleTerminalsError, "solve_all_y"),
    ],
)
def test_prune_invalid_terminals(terminals, error, match):
    with pytest.raises(error, match=match):
        prune(DP_TRACE, terminals)


# Tests for classify
@pytest.mark.parametrize(
    ("graph", "terminals", "expected"),
    [
        (PATCHED_RUN, PATCHED_RUN_TERMINALS, "E1"),
        (ConvexBipartiteGraph(m=5, intervals=((1, 3), (3, 5))), [1, 2], "E2"),
        (DP_TRACE, DP_TRACE_TERMINALS, "E3"),
        (FIG1, [1, 2], "E4"),
    ],
)
def test_classify(graph, terminals, expected):
    assert classify(graph, terminals) == expected


# Tests for compute_table
def test_compute_table_values_of_dp_trace():
    table = compute_table(DP_TRACE, DP_TRACE_TERMINALS)
    assert table.F == {
        (1, 2): 0,
        (2, 3): 2,
        (2, 7): 2,
        (3, 4): 3,
        (4, 5): 3,
        (5, 6): 3,
    }
    assert table.evaluations == 6
    assert table.window_offset == 1
    assert table.window_length == 7


def test_compute_table_provenance_of_dp_trace():
    entries = compute_table(DP_TRACE, DP_TRACE_TERMINALS).entries
    assert (entries[1].case, entries[1].back) == ("base", None)
    assert (entries[6].case, entries[6].branch, entries[6].back) == ("case2", "d", 1)
    assert (entries[3].case, entries[3].branch, entries[3].back) == ("case3", "d", 2)
    assert (entries[5].case, entries[5].branch, entries[5].back) == ("case3", "c", 6)


def test_compute_table_predecessors_are_computed_first():
    table = compute_table(DP_TRACE, DP_TRACE_TERMINALS)
    rank = {y: k for k, y in enumerate(table.order)}
    for entry in table.entries.values():
        if entry.back is not None:
            assert rank[entry.back] < rank[entry.y]


def test_compute_table_disconnected_graph_raises():
    graph = ConvexBipartiteGraph(m=4, intervals=((1, 2), (2, 2), (3, 4)))
    with pytest.raises(DisconnectedGraphError):
        compute_table(graph, [1, 3])


# Tests for table_value
def test_table_value_missing_interval_is_unbounded():
    table = compute_table(DP_TRACE, DP_TRACE_TERMINALS)
    assert table_value(table, 2, 7) == 2
    assert table_value(table, 1, 7) == math.inf


# Tests for reconstruct
def test_reconstruct_dp_trace_patches_uncovered_terminal():
    table = compute_table(DP_TRACE, DP_TRACE_TERMINALS)
    steiner_set, patched = reconstruct(table, DP_TRACE, DP_TRACE_TERMINALS)
    assert _labels(steiner_set) == ["x2", "x3", "x5", "y6"]
    assert patched == (3,)


def test_reconstruct_patches_overlapping_run():
    table = compute_table(PATCHED_RUN, PATCHED_RUN_TERMINALS)
    steiner_set, patched = reconstruct(table, PATCHED_RUN, PATCHED_RUN_TERMINALS)
    assert _labels(steiner_set) == ["x2", "x5", "x6", "x9", "y7"]
    assert patched == (5, 6)


def test_reconstruct_adds_non_terminal_connector():
    table = compute_table(CONNECTOR_CHAIN, [1, 3])
    steiner_set, patched = reconstruct(table, CONNECTOR_CHAIN, [1, 3])
    assert _labels(steiner_set) == ["x2", "x4", "y2"]
    assert patched == ()


def test_reconstruct_shared_endpoint():
    table = compute_table(SHARED_ENDPOINT, [1, 2])
    steiner_set, _ = reconstruct(table, SHARED_ENDPOINT, [1, 2])
    assert _labels(steiner_set) == ["x3"]


# Tests for solve_subset_y
@pytest.mark.parametrize(
    ("graph", "terminals", "expected"),
    [
        (DP_TRACE, DP_TRACE_TERMINALS, ["x2", "x3", "x5", "y6"]),
        (PATCHED_RUN, PATCHED_RUN_TERMINALS, ["x2", "x5", "x6", "x9", "y7"]),
        (CONNECTOR_CHAIN, [1, 3], ["x2", "x4", "y2"]),
        (SHARED_ENDPOINT, [1, 2], ["x3"]),
        (FIG1, [1, 2], ["x1"]),
    ],
)
def test_solve_subset_y_worked_instances(graph, terminals, expected):
    result = solve_subset_y(graph, terminals)
    assert _labels(result.steiner_set) == expected
    assert result.trace[-1]["table_gap"] is False


def test_solve_subset_y_single_terminal_is_empty():
    assert solve_subset_y(DP_TRACE, [3]).steiner_set == frozenset()


def test_solve_subset_y_trace_stages():
    trace = solve_subset_y(DP_TRACE, DP_TRACE_TERMINALS).trace
    assert [entry["stage"] for entry in trace] == [
        "sigma",
        "table",
        "reconstruct",
        "certify",
    ]
    assert trace[1]["class"] == "E3"
    assert trace[2]["patched"] == [3]


def test_solve_subset_y_falls_back_to_sweep_on_table_gap():
    result = solve_subset_y(TABLE_GAP, [1, 2, 3, 4])
    certify = result.trace[-1]
    assert certify["table_gap"] is True
    assert certify["table_size"] == 4
    assert certify["sweep_size"] == 3
    assert result.size == 3
    assert _labels(result.steiner_set) == ["x2", "x4", "x6"]


@settings(max_examples=80, deadline=None)
@given(connected_convex_graphs(max_m=7, max_n=6), st.data())
def test_solve_subset_y_matches_oracle(graph, data):
    if graph.n < 2:
        return
    indices = data.draw(
        st.lists(
            st.integers(1, graph.n), min_size=1, max_size=graph.n - 1, unique=True
        )
    )
    terminals = {y_vertex(i) for i in indices}
    result = solve_subset_y(graph, indices)
    assert verify_steiner_certificate(graph, terminals, result.steiner_set)
    assert result.size == min_steiner_brute(graph, terminals).optimum


# Tests for sweep_subset_y
def test_sweep_subset_y_counts_points_and_connectors():
    sweep = sweep_subset_y(DP_TRACE, DP_TRACE_TERMINALS)
    assert sweep.optimum == 4
    assert len(sweep.witness) == 4


def test_sweep_subset_y_free_points_counts_connectors_only():
    sweep = sweep_subset_y(CONNECTOR_CHAIN, [1, 3], count_points=False)
    assert sweep.optimum == 1
    assert y_vertex(2) in sweep.witness


def test_sweep_subset_y_single_terminal():
    assert sweep_subset_y(DP_TRACE, [2]).optimum == 0


# Tests for table_dump
def test_table_dump_tsv():
    dump = table_dump(compute_table(DP_TRACE, DP_TRACE_TERMINALS))
    lines = dump.splitlines()
    assert lines[0] == "i\tj\ty\tf\tF\tcase\tbranch\tback"
    assert lines[1] == "1\t2\t1\t0\t0\tbase\t\t"
    assert lines[2] == "2\t7\t6\t2\t2\tcase2\td\t1"
    assert len(lines) == 7
    assert dump.endswith("\n")


def test_table_dump_json():
    rows = json.loads(table_dump(compute_table(DP_TRACE, DP_TRACE_TERMINALS), "json"))
    assert [row["y"] for row in rows] == [1, 6, 2, 3, 4, 5]
    assert rows[-1]["f"] == 3


def test_table_dump_invalid_format():
    table = compute_table(DP_TRACE, DP_TRACE_TERMINALS)
    with pytest.raises(ValueError, match="Unknown dump format"):
        table_dump(table, "csv")
