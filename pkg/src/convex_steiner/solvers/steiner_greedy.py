"""This script deploys the greedy Steiner solvers for R=X, R subset X and R=Y."""

from convex_steiner.errors import InfeasibleTerminalsError
from convex_steiner.graphs.graph_core import (
    far_reach,
    require_connected,
    x_vertex,
    y_vertex,
)
from convex_steiner.solvers.results import build_result


def solve_all_x(graph):
    """Compute a minimum Steiner set when every X vertex is a terminal.

    Starting at z_1 = x_1 the walk repeatedly jumps to z_{i+1} = r(w(z_i)) and
    collects w(z_i) until r(w(z_i)) = x_m.

    Args:
        graph (ConvexBipartiteGraph): Connected convex bipartite graph.

    Returns:
        SteinerResult: Steiner set contained in Y. Each trace entry holds the
            current position z, the argmax set T(z), the chosen w(z) and its reach.
    """
    require_connected(graph)
    terminals = {x_vertex(p) for p in range(1, graph.m + 1)}
    chosen = []
    trace = []
    if graph.m > 1:
        z = 1
        while True:
            reach = far_reach(graph, z)
            right = graph.intervals[reach.w - 1][1]
            chosen.append(y_vertex(reach.w))
            trace.append(
                {
                    "z": z,
                    "t_set": sorted(reach.t_set),
                    "w": reach.w,
                    "reach": right,
                }
            )
            if right == graph.m:
                break
            z = right
    return build_result(graph, terminals, chosen, trace, "all_x")


def solve_subset_x(graph, terminals):
    """Compute a minimum Steiner set for a proper subset of X as terminals.

    Positions left of the first terminal are never entered. Each iteration
    compares the path S1 growing from p = r(w(z)) with the path S2 growing from the
    last reached terminal q = z_j, and keeps the shorter one (ties go to S2).

    Args:
        graph (ConvexBipartiteGraph): Connected convex bipartite graph.
        terminals (iterable of int): Terminal X positions, a proper nonempty subset.

    Returns:
        SteinerResult: Steiner set that may hold X and Y vertices. Trace entries hold
            p, q, |S1|, |S2| and the chosen branch of each iteration.

    Raises:
        InfeasibleTerminalsError: If the terminal set is empty or all of X.
        IndexError: If a terminal is out of range.
    """
    require_connected(graph)
    positions = _validate_subset_x(graph, terminals)
    terminal_vertices = {x_vertex(p) for p in positions}
    if len(positions) == 1:
        return build_result(graph, terminal_vertices, (), (), "subset_x")

    def w(position):
        return far_reach(graph, position).w

    def reach(position):
        return graph.intervals[w(position) - 1][1]

    def last_terminal_within(right):
        return max(p for p in positions if p <= right)

    z = positions[0]
    steiner = {y_vertex(w(z))}
    z_j = last_terminal_within(reach(z))
    trace = []
    while z_j < positions[-1]:
        following = positions[positions.index(z_j) + 1]
        p, q = reach(z), z_j
        s1 = {x_vertex(p)} if p != q else set()
        s2 = set()
        while following > reach(p):
            s1 |= {y_vertex(w(p)), x_vertex(reach(p))}
            p = reach(p)
        while following > reach(q):
            s2 |= {y_vertex(w(q)), x_vertex(reach(q))}
            q = reach(q)
        branch = "s1" if len(s1) < len(s2) else "s2"
        if branch == "s1":
            steiner |= s1 | {y_vertex(w(p))}
            z = p
        else:
            steiner |= s2 | {y_vertex(w(q))}
            z = q
        trace.append(
            {
                "iteration": len(trace) + 1,
                "p": p,
                "q": q,
                "s1": sorted(map(str, s1)),
                "s2": sorted(map(str, s2)),
                "s1_size": len(s1),
                "s2_size": len(s2),
                "branch": branch,
                "z": z,
            }
        )
        z_j = last_terminal_within(reach(z))
    return build_result(
        graph, terminal_vertices, steiner - terminal_vertices, trace, "subset_x"
    )


def solve_all_y(graph):
    """Compute a minimum Steiner set when every Y vertex is a terminal.

    Y is scanned by ascending right endpoint (ties by ascending left endpoint). An
    unmarked interval contributes its right endpoint; a marked one contributes it
    only if it does not end at x_m and no marked interval contains the next right
    endpoint. Adding a position marks every interval containing it.

    Args:
        graph (ConvexBipartiteGraph): Connected convex bipartite graph.

    Returns:
        SteinerResult: Steiner set contained in X. Trace entries are the scan rows
            with the action taken and the newly marked intervals.
    """
    require_connected(graph)
    terminals = {y_vertex(i) for i in range(1, graph.n + 1)}
    order = sigma_by_right(graph)
    chosen = []
    trace = []
    if graph.n > 1:
        marked = set()
        for row, index in enumerate(order):
            right = graph.intervals[index - 1][1]
            if index not in marked:
                action = "add"
            elif right == graph.m:
                action = "continue"
            elif row + 1 < len(order) and _covered(
                graph, marked, graph.intervals[order[row + 1] - 1][1]
            ):
                action = "continue"
            else:
                action = "add"
            newly_marked = []
            if action == "add":
                chosen.append(right)
                newly_marked = [
                    i
                    for i in _containing(graph, right)
                    if i not in marked
                ]
                marked.update(newly_marked)
            trace.append(
                {
                    "row": row + 1,
                    "y": index,
                    "r": right,
                    "action": action,
                    "marked": sorted(newly_marked),
                }
            )
    return build_result(
        graph, terminals, [x_vertex(p) for p in chosen], trace, "all_y"
    )


def sigma_by_right(graph):
    """Order Y by ascending right endpoint, ties by ascending left endpoint."""
    return sorted(
        range(1, graph.n + 1),
        key=lambda i: (graph.intervals[i - 1][1], graph.intervals[i - 1][0], i),
    )


def _containing(graph, position):
    return [
        index
        for index, (left, right) in enumerate(graph.intervals, start=1)
        if left <= position <= right
    ]


def _covered(graph, marked, position):
    """Check whether some marked interval contains position."""
    return any(
        graph.intervals[i - 1][0] <= position <= graph.intervals[i - 1][1]
        for i in marked
    )


def _validate_subset_x(graph, terminals):
    positions = sorted(set(terminals))
    if not positions:
        error_msg = "The terminal set must be nonempty."
        raise InfeasibleTerminalsError(error_msg)
    if positions[0] < 1 or positions[-1] > graph.m:
        error_msg = f"Terminal positions must lie in 1..{graph.m}."
        raise IndexError(error_msg)
    if len(positions) == graph.m:
        error_msg = "All of X is terminal; use solve_all_x instead."
        raise InfeasibleTerminalsError(error_msg)
    return positions
