"""This script deploys the replay of the worked instances shipped in the fixtures
folder.

Each replay solves a fixture, asks the matching oracle for the optimum and diffs the
observations against the expected values below. The report holds no timings, so two
runs produce identical output.
"""

from convex_steiner.cli.formats import parse_document
from convex_steiner.config import FIXTURES
from convex_steiner.graphs.graph_core import (
    validate_k_star_caterpillar_convex,
    x_vertex,
    y_vertex,
)
from convex_steiner.oracle.oracle import min_steiner_brute, min_vertex_cover_brute
from convex_steiner.reductions.vertex_cover import vc_to_caterpillar_stree
from convex_steiner.solvers.results import verify_steiner_certificate
from convex_steiner.solvers.steiner_dp import compute_table, solve_subset_y
from convex_steiner.solvers.steiner_greedy import (
    solve_all_x,
    solve_all_y,
    solve_subset_x,
)

EXPECTED = {
    "fig1": {"size": 2, "oracle": 2, "valid": True},
    "fig2": {
        "set": ["x10", "x5", "y1", "y10", "y4", "y5", "y7", "y9"],
        "size": 8,
        "oracle": 8,
        "valid": True,
    },
    "table1": {
        "set": ["x2", "x4", "x7"],
        "rows": [
            [1, 1, 2, "add", [1, 2]],
            [2, 2, 4, "add", [3, 4]],
            [3, 3, 6, "continue", []],
            [4, 4, 7, "add", [5]],
            [5, 5, 8, "continue", []],
        ],
        "oracle": 3,
        "valid": True,
    },
    "dp_trace": {
        "F": {"1,2": 0, "2,3": 2, "2,7": 2, "3,4": 3, "4,5": 3, "5,6": 3},
        "size": 4,
        "contains_y6": True,
        "oracle": 4,
        "valid": True,
    },
    "triangle": {"cover": 2, "steiner": 2, "caterpillar": True},
}


def replay_paper_traces(fixtures=FIXTURES):
    """Replay every fixture and diff it against EXPECTED.

    Args:
        fixtures (Path): Folder holding fig1.cbg, fig2.cbg, table1.cbg, dp_trace.cbg
            and triangle.g.

    Returns:
        dict: 'ok' plus one entry per fixture with the observed values and the list
            of differences.
    """
    observed = {
        "fig1": _replay_fig1(_load(fixtures, "fig1.cbg")),
        "fig2": _replay_fig2(_load(fixtures, "fig2.cbg")),
        "table1": _replay_table1(_load(fixtures, "table1.cbg")),
        "dp_trace": _replay_dp_trace(_load(fixtures, "dp_trace.cbg")),
        "triangle": _replay_triangle(_load(fixtures, "triangle.g")),
    }
    report = {
        name: {"observed": values, "diff": diff_expected(EXPECTED[name], values)}
        for name, values in observed.items()
    }
    return {"ok": all(not entry["diff"] for entry in report.values()), **report}


def diff_expected(expected, observed):
    """List 'key: expected a, observed b' for every expected key that differs."""
    return [
        f"{key}: expected {value!r}, observed {observed.get(key)!r}"
        for key, value in expected.items()
        if observed.get(key) != value
    ]


def _load(fixtures, name):
    return parse_document((fixtures / name).read_text(encoding="utf-8"))


def _terminals(document):
    return {x_vertex(p) for p in document.x_terminals} | {
        y_vertex(i) for i in document.y_terminals
    }


def _replay_fig1(document):
    graph = document.instance
    result = solve_all_x(graph)
    terminals = _terminals(document)
    return {
        "set": sorted(map(str, result.steiner_set)),
        "size": result.size,
        "oracle": min_steiner_brute(graph, terminals).optimum,
        "valid": verify_steiner_certificate(graph, terminals, result.steiner_set),
    }


def _replay_fig2(document):
    graph = document.instance
    result = solve_subset_x(graph, document.x_terminals)
    terminals = _terminals(document)
    return {
        "set": sorted(map(str, result.steiner_set)),
        "size": result.size,
        "oracle": min_steiner_brute(graph, terminals).optimum,
        "valid": verify_steiner_certificate(graph, terminals, result.steiner_set),
        "iterations": [
            [entry["iteration"], entry["s1_size"], entry["s2_size"], entry["branch"]]
            for entry in result.trace
        ],
    }


def _replay_table1(document):
    graph = document.instance
    result = solve_all_y(graph)
    terminals = {y_vertex(i) for i in range(1, graph.n + 1)}
    return {
        "set": sorted(map(str, result.steiner_set)),
        "rows": [
            [row["row"], row["y"], row["r"], row["action"], row["marked"]]
            for row in result.trace
        ],
        "oracle": min_steiner_brute(graph, terminals).optimum,
        "valid": verify_steiner_certificate(graph, terminals, result.steiner_set),
    }


def _replay_dp_trace(document):
    graph = document.instance
    table = compute_table(graph, document.y_terminals)
    result = solve_subset_y(graph, document.y_terminals)
    terminals = _terminals(document)
    offset = table.window_offset - 1
    return {
        "F": {
            f"{i + offset},{j + offset}": value
            for (i, j), value in sorted(table.F.items())
        },
        "set": sorted(map(str, result.steiner_set)),
        "size": result.size,
        "contains_y6": y_vertex(6) in result.steiner_set,
        "oracle": min_steiner_brute(graph, terminals).optimum,
        "valid": verify_steiner_certificate(graph, terminals, result.steiner_set),
    }


def _replay_triangle(document):
    graph = document.instance
    cover = min_vertex_cover_brute(graph)
    instance = vc_to_caterpillar_stree(graph, cover.optimum)
    steiner = min_steiner_brute(instance.star_graph, instance.terminals)
    return {
        "cover": cover.optimum,
        "steiner": steiner.optimum,
        "caterpillar": validate_k_star_caterpillar_convex(
            instance.star_graph, instance.caterpillar, 1
        ),
    }
