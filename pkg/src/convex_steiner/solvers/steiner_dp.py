"""This script deploys the dynamic program for terminal sets R that are proper subsets
of Y.

The table F is computed over the window of X positions starting at l(z_1), where z_1
is the first terminal in sigma order. Positions are renumbered 1..t inside the
window; intervals ending before the window are dropped and intervals starting
before it are clipped to position 1.
"""

import json
import math
from dataclasses import dataclass

from convex_steiner.errors import InfeasibleTerminalsError, TableInconsistencyError
from convex_steiner.graphs.graph_core import require_connected, x_vertex, y_vertex
from convex_steiner.solvers.results import build_result, verify_steiner_certificate


@dataclass(frozen=True)
class SigmaOrder:
    order: tuple[int, ...]


@dataclass(frozen=True)
class DpEntry:
    """Value f of one interval with the provenance of its minimum.

    Attributes:
        y (int): Y index of the interval.
        i (int): Window left endpoint.
        j (int): Window right endpoint.
        f (int): Value of the interval.
        case (str): 'base', 'case1', 'case2' or 'case3'.
        branch (str | None): 'c' or 'd' for the predecessor type taken, None at base.
        back (int | None): Y index of the minimizing predecessor.
    """

    y: int
    i: int
    j: int
    f: int
    case: str
    branch: str | None
    back: int | None


@dataclass(frozen=True)
class DpTable:
    """Table of the R subset Y dynamic program.

    Attributes:
        window_offset (int): Original position of window position 1.
        window_length (int): Number of window positions t.
        order (tuple of int): Sigma order of the kept intervals in the window.
        entries (dict): Y index to DpEntry.
        F (dict): (i, j) to the minimum f over intervals at (i, j). Absent keys are
            unbounded.
        evaluations (int): Number of interval values computed.
        predecessor_reads (int): Number of predecessor values read.
    """

    window_offset: int
    window_length: int
    order: tuple[int, ...]
    entries: dict
    F: dict
    evaluations: int
    predecessor_reads: int


@dataclass(frozen=True)
class SweepResult:
    optimum: int
    witness: frozenset


def sigma_order(graph):
    """Order Y by ascending l, ties by descending r, full ties by input order."""
    order = sorted(
        range(1, graph.n + 1),
        key=lambda i: (graph.intervals[i - 1][0], -graph.intervals[i - 1][1]),
    )
    return SigmaOrder(order=tuple(order))


def indicator(graph, terminals):
    """Return b with b(y)=0 for terminals and 1 otherwise."""
    terminal_set = set(terminals)
    return {i: 0 if i in terminal_set else 1 for i in range(1, graph.n + 1)}


def prune(graph, terminals):
    """Restrict the instance to the window starting at l(z_1).

    Returns:
        tuple: (offset, length, windowed) where windowed maps each kept Y index to
            its window interval (i, j).
    """
    terminals = _validate_subset_y(graph, terminals)
    first = min(
        terminals,
        key=lambda i: (graph.intervals[i - 1][0], -graph.intervals[i - 1][1], i),
    )
    offset = graph.intervals[first - 1][0]
    windowed = {
        index: (max(left, offset) - offset + 1, right - offset + 1)
        for index, (left, right) in enumerate(graph.intervals, start=1)
        if right >= offset
    }
    return offset, graph.m - offset + 1, windowed


def classify(graph, terminals):
    """Return the instance class E1..E4 of the last terminal in sigma order.

    E4 applies when the last terminal starts at window position 1. Otherwise the
    neighbors of window position u-1 decide: intervals reaching at least r_k are of
    type c, intervals ending in u..r_k-1 are of type d; both give E3, only c gives
    E1 and only d gives E2.

    Raises:
        TableInconsistencyError: If no neighbor of position u-1 is of type c or d.
    """
    _, _, windowed = prune(graph, terminals)
    last = _last_terminal(windowed, terminals)
    u, v = windowed[last]
    if u == 1:
        return "E4"
    neighbors = [(i, j) for i, j in windowed.values() if i <= u - 1 <= j]
    has_c = any(j >= v for _, j in neighbors)
    has_d = any(u <= j < v for _, j in neighbors)
    if has_c and has_d:
        return "E3"
    if has_c:
        return "E1"
    if has_d:
        return "E2"
    error_msg = f"No interval links window position {u - 1} to the last terminal."
    raise TableInconsistencyError(error_msg)


def compute_table(graph, terminals):
    """Compute the values f of every window interval and the table F.

    Args:
        graph (ConvexBipartiteGraph): Connected convex bipartite graph.
        terminals (iterable of int): Terminal Y indices, a proper nonempty subset.

    Returns:
        DpTable: The filled table with back-pointers.

    Raises:
        TableInconsistencyError: If an interval has no eligible predecessor, or a
            predecessor is read before it was computed.
    """
    require_connected(graph)
    offset, length, windowed = prune(graph, terminals)
    b = indicator(graph, terminals)
    order = tuple(
        sorted(windowed, key=lambda y: (windowed[y][0], -windowed[y][1], y))
    )
    entries = {}
    reads = 0
    for y in order:
        i, j = windowed[y]
        if i == 1:
            entries[y] = DpEntry(y, i, j, b[y], "base", None, None)
            continue
        best = {}
        for pred in order:
            left, right = windowed[pred]
            if not left <= i - 1 <= right:
                continue
            if right >= j:
                kind = "c"
            elif i <= right < j:
                kind = "d"
            else:
                continue
            if pred not in entries or left >= i:
                error_msg = f"Predecessor y{pred} of y{y} read before it was computed."
                raise TableInconsistencyError(error_msg)
            reads += 1
            if kind not in best or entries[pred].f < entries[best[kind]].f:
                best[kind] = pred
        if not best:
            error_msg = f"y{y} at ({i}, {j}) has no eligible predecessor."
            raise TableInconsistencyError(error_msg)
        candidates = {}
        if "c" in best:
            candidates["c"] = 1 + entries[best["c"]].f
        if "d" in best:
            candidates["d"] = 1 + b[y] + entries[best["d"]].f
        case = {("c",): "case1", ("d",): "case2"}.get(tuple(best), "case3")
        d_value = candidates.get("d", math.inf)
        branch = "d" if d_value <= candidates.get("c", math.inf) else "c"
        entries[y] = DpEntry(y, i, j, candidates[branch], case, branch, best[branch])
    table_values = {}
    for entry in entries.values():
        key = (entry.i, entry.j)
        table_values[key] = min(table_values.get(key, math.inf), entry.f)
    return DpTable(
        window_offset=offset,
        window_length=length,
        order=order,
        entries=entries,
        F=table_values,
        evaluations=len(entries),
        predecessor_reads=reads,
    )


def table_value(table, i, j):
    """Return F[i, j], or math.inf when no interval sits at (i, j)."""
    return table.F.get((i, j), math.inf)


def reconstruct(table, graph, terminals):
    """Walk the back-pointers from the last terminal and patch uncovered terminals.

    Every step adds the connector at the window position l(z), plus z itself when z
    is a non-terminal reached through a d branch. A non-terminal base interval adds
    itself and the first window position. Afterwards, each maximal run of
    sigma-consecutive, pairwise overlapping terminals whose neighborhoods miss the
    set gets l(z) for every member but the first; a run of one gets l(z).

    Args:
        table (DpTable): Table from compute_table.
        graph (ConvexBipartiteGraph): Host graph.
        terminals (iterable of int): Terminal Y indices.

    Returns:
        tuple: (steiner_set, patched) where patched lists the positions added by
            the patch step.
    """
    terminal_set = set(terminals)
    offset = table.window_offset
    entries = table.entries
    last = _last_terminal({y: (e.i, e.j) for y, e in entries.items()}, terminal_set)
    chosen = set()
    current = entries[last]
    while True:
        if current.case == "base":
            if current.y not in terminal_set:
                chosen |= {y_vertex(current.y), x_vertex(offset)}
            break
        chosen.add(x_vertex(current.i + offset - 1))
        if current.branch == "d" and current.y not in terminal_set:
            chosen.add(y_vertex(current.y))
        current = entries[current.back]
    positions = {v.index for v in chosen if v.side == "x"}
    sigma_terminals = [y for y in table.order if y in terminal_set]
    uncovered = [
        y
        for y in sigma_terminals
        if not any(
            graph.intervals[y - 1][0] <= p <= graph.intervals[y - 1][1]
            for p in positions
        )
    ]
    patched = []
    for run in _overlapping_runs(graph, sigma_terminals, uncovered):
        members = run if len(run) == 1 else run[1:]
        patched.extend(graph.intervals[y - 1][0] for y in members)
    chosen |= {x_vertex(p) for p in patched}
    return frozenset(chosen), tuple(patched)


def sweep_subset_y(graph, terminals, count_points=True):
    """Compute an exact minimum Steiner set for R subset Y by a left-to-right sweep.

    A state is the last chosen X position together with the reach of the chosen
    non-terminal Y vertex that extends furthest from it. Consecutive chosen
    positions must share a terminal or chosen non-terminal, no terminal may fall
    strictly between them, the first position must not pass the smallest terminal
    right endpoint and the last must not precede the largest terminal left endpoint.

    Args:
        graph (ConvexBipartiteGraph): Connected convex bipartite graph.
        terminals (iterable of int): Terminal Y indices.
        count_points (bool): If False, X positions are free and the sweep
            minimizes the number of non-terminal Y vertices first, then positions.

    Returns:
        SweepResult: Optimum size and a witness Steiner set. Without
            count_points the optimum counts Y vertices only.
    """
    require_connected(graph)
    terminals = _validate_subset_y(graph, terminals)
    if len(terminals) == 1:
        return SweepResult(optimum=0, witness=frozenset())
    m = graph.m
    spans = [graph.intervals[i - 1] for i in terminals]
    first_limit = min(right for _, right in spans)
    last_floor = max(left for left, _ in spans)
    terminal_reach = [0] * (m + 1)
    for left, right in spans:
        for p in range(left, right + 1):
            terminal_reach[p] = max(terminal_reach[p], right)
    carrier = [(0, 0)] * (m + 1)
    terminal_set = set(terminals)
    for index, (left, right) in enumerate(graph.intervals, start=1):
        if index in terminal_set:
            continue
        for p in range(left, right + 1):
            if right > carrier[p][0]:
                carrier[p] = (right, index)
    inner_limit = [
        min((right for left, right in spans if left > p), default=m)
        for p in range(m + 1)
    ]

    point_step = (1, 0) if count_points else (0, 1)
    carrier_step = (2, 0) if count_points else (1, 1)
    states = [{} for _ in range(m + 1)]
    back = {}
    for p in range(1, first_limit + 1):
        states[p][0] = point_step
        back[(p, 0)] = None
    for p in range(1, m + 1):
        for reach, cost in sorted(states[p].items()):
            for q in range(p + 1, inner_limit[p] + 1):
                moves = []
                if terminal_reach[p] >= q or reach >= q:
                    moves.append((reach if reach >= q else 0, point_step, None))
                if carrier[p][0] >= q and carrier[p][0] > reach:
                    moves.append((carrier[p][0], carrier_step, carrier[p][1]))
                if not moves:
                    break
                for target, step, added in moves:
                    total = (cost[0] + step[0], cost[1] + step[1])
                    if target not in states[q] or total < states[q][target]:
                        states[q][target] = total
                        back[(q, target)] = (p, reach, added)
    finals = [
        (cost, p, reach)
        for p in range(last_floor, m + 1)
        for reach, cost in states[p].items()
    ]
    _, p, reach = min(finals)
    witness = set()
    state = (p, reach)
    while state is not None:
        witness.add(x_vertex(state[0]))
        step = back[state]
        if step is None:
            break
        if step[2] is not None:
            witness.add(y_vertex(step[2]))
        state = (step[0], step[1])
    optimum = len(witness) if count_points else sum(v.side == "y" for v in witness)
    return SweepResult(optimum=optimum, witness=frozenset(witness))


def solve_subset_y(graph, terminals):
    """Compute a minimum Steiner set for a proper subset R of Y.

    Runs sigma_order, prune, classify, compute_table and reconstruct, then certifies
    the reconstruction with sweep_subset_y. The reconstruction is returned when it
    is a valid set of optimum size; otherwise the sweep witness is returned and the
    trace flags the table gap.

    Args:
        graph (ConvexBipartiteGraph): Connected convex bipartite graph.
        terminals (iterable of int): Terminal Y indices.

    Returns:
        SteinerResult: Steiner set with one trace entry per pipeline stage.
    """
    require_connected(graph)
    terminals = _validate_subset_y(graph, terminals)
    terminal_vertices = {y_vertex(i) for i in terminals}
    if len(terminals) == 1:
        return build_result(graph, terminal_vertices, (), (), "subset_y")
    trace = [{"stage": "sigma", "order": list(sigma_order(graph).order)}]
    tag = classify(graph, terminals)
    table = compute_table(graph, terminals)
    trace.append(
        {
            "stage": "table",
            "class": tag,
            "window_offset": table.window_offset,
            "window_length": table.window_length,
            "evaluations": table.evaluations,
            "predecessor_reads": table.predecessor_reads,
        }
    )
    if tag == "E4":
        candidate, patched = frozenset({x_vertex(table.window_offset)}), ()
    else:
        candidate, patched = reconstruct(table, graph, terminals)
    trace.append(
        {
            "stage": "reconstruct",
            "set": sorted(map(str, candidate)),
            "patched": list(patched),
        }
    )
    sweep = sweep_subset_y(graph, terminals)
    candidate_valid = verify_steiner_certificate(graph, terminal_vertices, candidate)
    table_gap = not candidate_valid or len(candidate) != sweep.optimum
    trace.append(
        {
            "stage": "certify",
            "table_size": len(candidate),
            "table_valid": candidate_valid,
            "sweep_size": sweep.optimum,
            "table_gap": table_gap,
        }
    )
    steiner_set = sweep.witness if table_gap else candidate
    return build_result(graph, terminal_vertices, steiner_set, trace, "subset_y")


def table_dump(table, fmt="tsv"):
    """Dump the table rows i, j, y, f, F, case, branch and back-pointer.

    Args:
        table (DpTable): Table to dump.
        fmt (str): 'tsv' or 'json'.

    Returns:
        str: The dump.

    Raises:
        ValueError: If fmt is unknown.
    """
    rows = [
        {
            "i": e.i,
            "j": e.j,
            "y": e.y,
            "f": e.f,
            "F": table.F[(e.i, e.j)],
            "case": e.case,
            "branch": e.branch or "",
            "back": e.back or "",
        }
        for e in (table.entries[y] for y in table.order)
    ]
    if fmt == "json":
        return json.dumps(rows, indent=2)
    if fmt == "tsv":
        header = ["i", "j", "y", "f", "F", "case", "branch", "back"]
        lines = ["\t".join(header)]
        lines += ["\t".join(str(row[key]) for key in header) for row in rows]
        return "\n".join(lines) + "\n"
    error_msg = f"Unknown dump format '{fmt}'. Choose from json, tsv."
    raise ValueError(error_msg)


def _last_terminal(windowed, terminals):
    """Return the sigma-last terminal among the windowed intervals."""
    return max(
        (y for y in windowed if y in set(terminals)),
        key=lambda y: (windowed[y][0], -windowed[y][1], y),
    )


def _overlapping_runs(graph, sigma_terminals, uncovered):
    """Split uncovered terminals into sigma-consecutive overlapping runs."""
    runs = []
    rank = {y: k for k, y in enumerate(sigma_terminals)}
    for y in uncovered:
        if runs:
            previous = runs[-1][-1]
            consecutive = rank[y] == rank[previous] + 1
            overlapping = graph.intervals[y - 1][0] <= graph.intervals[previous - 1][1]
            if consecutive and overlapping:
                runs[-1].append(y)
                continue
        runs.append([y])
    return runs


def _validate_subset_y(graph, terminals):
    indices = sorted(set(terminals))
    if not indices:
        error_msg = "The terminal set must be nonempty."
        raise InfeasibleTerminalsError(error_msg)
    if indices[0] < 1 or indices[-1] > graph.n:
        error_msg = f"Terminal indices must lie in 1..{graph.n}."
        raise IndexError(error_msg)
    if len(indices) == graph.n:
        error_msg = "All of Y is terminal; use solve_all_y instead."
        raise InfeasibleTerminalsError(error_msg)
    return tuple(indices)
