"""This script deploys the graph types and primitive queries of the toolkit."""

from collections.abc import Mapping
from dataclasses import dataclass, field
from enum import Enum
from typing import NamedTuple

import networkx as nx

from convex_steiner.errors import DisconnectedGraphError, InfeasibleTerminalsError


class Vertex(NamedTuple):
    """A vertex of a convex bipartite graph, ordered X before Y then by index."""

    side: str
    index: int

    def __str__(self):
        return f"{self.side}{self.index}"


def x_vertex(position):
    return Vertex("x", position)


def y_vertex(index):
    return Vertex("y", index)


def parse_vertex(label):
    """Convert a label like 'x3' or 'y12' into a Vertex.

    Args:
        label (str): Vertex label.

    Returns:
        Vertex: The parsed vertex.

    Raises:
        ValueError: If the label is not a side letter followed by a positive integer.
    """
    side, digits = label[:1], label[1:]
    if side not in {"x", "y"} or not digits.isdigit() or int(digits) < 1:
        error_msg = f"Invalid vertex label '{label}'."
        raise ValueError(error_msg)
    return Vertex(side, int(digits))


@dataclass(frozen=True)
class ConvexBipartiteGraph:
    """Ordered X side x_1..x_m plus one interval (l, r) per Y vertex y_1..y_n."""

    m: int
    intervals: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if not isinstance(self.m, int) or isinstance(self.m, bool):
            error_msg = f"m must be an integer, got {type(self.m).__name__}."
            raise TypeError(error_msg)
        normalized = tuple((int(left), int(right)) for left, right in self.intervals)
        object.__setattr__(self, "intervals", normalized)

    @property
    def n(self):
        return len(self.intervals)


@dataclass(frozen=True)
class GeneralGraph:
    """Plain graph on vertices 1..vertex_count."""

    vertex_count: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        normalized = tuple((int(u), int(v)) for u, v in self.edges)
        seen = set()
        for u, v in normalized:
            if u == v:
                error_msg = f"Self-loop on vertex {u} is not allowed."
                raise ValueError(error_msg)
            if not (1 <= u <= self.vertex_count and 1 <= v <= self.vertex_count):
                error_msg = f"Edge ({u}, {v}) leaves the range 1..{self.vertex_count}."
                raise ValueError(error_msg)
            key = frozenset((u, v))
            if key in seen:
                error_msg = f"Duplicate edge ({u}, {v})."
                raise ValueError(error_msg)
            seen.add(key)
        object.__setattr__(self, "edges", normalized)


@dataclass(frozen=True)
class IntervalGraphModel:
    """Integer-endpoint interval family; vertex v_i is the i-th interval."""

    intervals: tuple[tuple[int, int], ...]

    def __post_init__(self):
        normalized = []
        for left, right in self.intervals:
            if int(left) != left or int(right) != right:
                error_msg = "Interval endpoints must be integers."
                raise TypeError(error_msg)
            if left > right:
                error_msg = f"Interval [{left}, {right}] has left > right."
                raise ValueError(error_msg)
            normalized.append((int(left), int(right)))
        object.__setattr__(self, "intervals", tuple(normalized))

    @property
    def n(self):
        return len(self.intervals)


@dataclass(frozen=True)
class CaterpillarStructure:
    """Backbone path on the X side with the pendant leaves of each backbone vertex."""

    backbone: tuple
    pendants: Mapping = field(default_factory=dict)


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violations: tuple[str, ...]
    connected: bool


@dataclass(frozen=True)
class FarReach:
    w: int
    t_set: frozenset[int]


class TerminalCase(Enum):
    ALL_X = "all_x"
    SUBSET_X = "subset_x"
    ALL_Y = "all_y"
    SUBSET_Y = "subset_y"
    MIXED = "mixed"


@dataclass(frozen=True)
class TerminalSpec:
    """Terminal case of an instance together with its terminal positions/indices."""

    case: TerminalCase
    x_terminals: frozenset[int]
    y_terminals: frozenset[int]

    @property
    def vertices(self):
        return frozenset(x_vertex(p) for p in self.x_terminals) | frozenset(
            y_vertex(i) for i in self.y_terminals
        )


def validate_convex(graph):
    """Report bound violations and connectivity of a convex bipartite graph.

    Connectivity is evaluated on the intervals that respect the bounds.

    Args:
        graph (ConvexBipartiteGraph): Graph to check.

    Returns:
        ValidationReport: ok is True iff there are no violations and the graph is
            connected.
    """
    _validate_graph_type(graph)
    violations = []
    if graph.m < 1:
        violations.append(f"m={graph.m} must be at least 1")
    for index, (left, right) in enumerate(graph.intervals, start=1):
        if left < 1:
            violations.append(f"y{index}: l={left} < 1")
        if left > right:
            violations.append(f"y{index}: l={left} > r={right}")
        if right > graph.m:
            violations.append(f"y{index}: r={right} > m={graph.m}")
    connected = graph.m >= 1 and _gaps_spanned(graph)
    return ValidationReport(
        ok=not violations and connected,
        violations=tuple(violations),
        connected=connected,
    )


def require_connected(graph):
    """Raise unless graph is a valid, connected convex bipartite graph.

    Raises:
        ValueError: If some interval violates 1 <= l <= r <= m.
        DisconnectedGraphError: If the graph is not connected.
    """
    report = validate_convex(graph)
    if report.violations:
        error_msg = "Invalid convex bipartite graph: " + "; ".join(report.violations)
        raise ValueError(error_msg)
    if not report.connected:
        error_msg = "The convex bipartite graph is not connected."
        raise DisconnectedGraphError(error_msg)


def _gaps_spanned(graph):
    """Check that every pair x_p, x_{p+1} shares a Y neighbor."""
    valid = [
        (left, right)
        for left, right in graph.intervals
        if 1 <= left <= right <= graph.m
    ]
    if graph.m == 1:
        return True
    if not valid:
        return False
    spans = [0] * (graph.m + 2)
    for left, right in valid:
        spans[left] += 1
        spans[right] -= 1
    running = 0
    for p in range(1, graph.m):
        running += spans[p]
        if running == 0:
            return False
    return True


def interval_bounds(graph, y):
    """Return (l_y, r_y) of Y vertex y.

    Raises:
        IndexError: If y is not in 1..n.
    """
    if not 1 <= y <= graph.n:
        error_msg = f"Y index {y} out of range 1..{graph.n}."
        raise IndexError(error_msg)
    return graph.intervals[y - 1]


def y_neighbors(graph, x):
    """Return the Y indices adjacent to position x, ascending."""
    return tuple(
        index
        for index, (left, right) in enumerate(graph.intervals, start=1)
        if left <= x <= right
    )


def far_reach(graph, x):
    """Compute T(x) and its representative w(x).

    T(x) holds the neighbors of x_x with maximum right endpoint; w(x) is the member
    with the smallest Y index.

    Args:
        graph (ConvexBipartiteGraph): Graph to query.
        x (int): X position.

    Returns:
        FarReach: The representative and the full argmax set.

    Raises:
        IndexError: If x is not in 1..m.
        DisconnectedGraphError: If x has no Y neighbor.
    """
    if not 1 <= x <= graph.m:
        error_msg = f"X position {x} out of range 1..{graph.m}."
        raise IndexError(error_msg)
    neighbors = y_neighbors(graph, x)
    if not neighbors:
        error_msg = f"x{x} has no Y neighbor; the graph is disconnected."
        raise DisconnectedGraphError(error_msg)
    reach = max(graph.intervals[i - 1][1] for i in neighbors)
    t_set = frozenset(i for i in neighbors if graph.intervals[i - 1][1] == reach)
    return FarReach(w=min(t_set), t_set=t_set)


def vertices(graph):
    """All vertices of a convex bipartite graph in X-then-Y order."""
    return tuple(x_vertex(p) for p in range(1, graph.m + 1)) + tuple(
        y_vertex(i) for i in range(1, graph.n + 1)
    )


def edges(graph):
    """Derive the (x position, y index) edge list of a convex bipartite graph."""
    return tuple(
        (p, index)
        for index, (left, right) in enumerate(graph.intervals, start=1)
        for p in range(left, right + 1)
    )


def from_edges(m, n, edge_list):
    """Build the interval form from an explicit bipartite edge list.

    Args:
        m (int): Number of X vertices.
        n (int): Number of Y vertices.
        edge_list (iterable of tuple): Pairs (x position, y index).

    Returns:
        ConvexBipartiteGraph: Graph with the same adjacency.

    Raises:
        ValueError: If an endpoint is out of range, or some Y neighborhood is empty
            or not consecutive.
    """
    neighborhoods = {index: set() for index in range(1, n + 1)}
    for p, index in edge_list:
        if not (1 <= p <= m and 1 <= index <= n):
            error_msg = f"Edge (x{p}, y{index}) out of range."
            raise ValueError(error_msg)
        neighborhoods[index].add(p)
    intervals = []
    for index in range(1, n + 1):
        positions = neighborhoods[index]
        if not positions:
            error_msg = f"y{index} has an empty neighborhood."
            raise ValueError(error_msg)
        left, right = min(positions), max(positions)
        if right - left + 1 != len(positions):
            error_msg = f"Neighborhood of y{index} is not consecutive."
            raise ValueError(error_msg)
        intervals.append((left, right))
    return ConvexBipartiteGraph(m=m, intervals=tuple(intervals))


def path_structure(graph):
    """The 0-star caterpillar (path x_1..x_m) of a convex bipartite graph."""
    backbone = tuple(x_vertex(p) for p in range(1, graph.m + 1))
    return CaterpillarStructure(backbone=backbone, pendants={v: () for v in backbone})


def interval_edges(model):
    """Edges of the intersection graph of an interval family, 1-based."""
    pairs = []
    for i, (left_i, right_i) in enumerate(model.intervals, start=1):
        for j in range(i + 1, model.n + 1):
            left_j, right_j = model.intervals[j - 1]
            if left_i <= right_j and left_j <= right_i:
                pairs.append((i, j))
    return tuple(pairs)


def as_networkx(graph):
    """Convert any supported graph into a networkx graph.

    Convex bipartite graphs get Vertex nodes with the networkx 'bipartite' attribute
    (0 for X, 1 for Y); general graphs and interval families get nodes 1..n.

    Args:
        graph (ConvexBipartiteGraph | GeneralGraph | IntervalGraphModel | nx.Graph):
            Graph to convert. networkx graphs are returned unchanged.

    Returns:
        nx.Graph: The converted graph.

    Raises:
        TypeError: If the graph type is unsupported.
    """
    if isinstance(graph, nx.Graph):
        return graph
    converted = nx.Graph()
    if isinstance(graph, ConvexBipartiteGraph):
        converted.add_nodes_from(
            (x_vertex(p) for p in range(1, graph.m + 1)), bipartite=0
        )
        converted.add_nodes_from(
            (y_vertex(i) for i in range(1, graph.n + 1)), bipartite=1
        )
        converted.add_edges_from(
            (x_vertex(p), y_vertex(i)) for p, i in edges(graph)
        )
    elif isinstance(graph, GeneralGraph):
        converted.add_nodes_from(range(1, graph.vertex_count + 1))
        converted.add_edges_from(graph.edges)
    elif isinstance(graph, IntervalGraphModel):
        converted.add_nodes_from(range(1, graph.n + 1))
        converted.add_edges_from(interval_edges(graph))
    else:
        error_msg = f"Unsupported graph type {type(graph).__name__}."
        raise TypeError(error_msg)
    return converted


def induced_connected(graph, vertex_set):
    """Check whether vertex_set induces a connected subgraph.

    Args:
        graph (ConvexBipartiteGraph | GeneralGraph | IntervalGraphModel | nx.Graph):
            Host graph.
        vertex_set (iterable): Vertex ids of the host graph.

    Returns:
        bool: True iff the induced subgraph is connected.

    Raises:
        ValueError: If vertex_set is empty or contains an id not in the graph.
    """
    host = as_networkx(graph)
    chosen = set(vertex_set)
    if not chosen:
        error_msg = "vertex_set must be nonempty."
        raise ValueError(error_msg)
    unknown = [v for v in chosen if v not in host]
    if unknown:
        error_msg = f"Invalid vertex id(s): {sorted(map(str, unknown))}."
        raise ValueError(error_msg)
    return nx.is_connected(host.subgraph(chosen))


def validate_k_star_caterpillar_convex(graph, structure, k):
    """Check that every Y' neighborhood induces a subtree of a k-star caterpillar.

    Args:
        graph (nx.Graph): Bipartite graph whose nodes carry the networkx 'bipartite'
            attribute, 0 for X' and 1 for Y'.
        structure (CaterpillarStructure): Caterpillar on X'.
        k (int): Pendants per backbone vertex.

    Returns:
        bool: True iff N(y) is nonempty and induces a subtree for every y in Y'.

    Raises:
        ValueError: If the structure does not span X', is malformed, or some
            backbone vertex does not carry exactly k pendants.
    """
    graph = as_networkx(graph)
    tree = _caterpillar_tree(structure, k)
    x_side = {v for v, side in graph.nodes(data="bipartite") if side == 0}
    if set(tree.nodes) != x_side:
        error_msg = "The caterpillar structure does not span X'."
        raise ValueError(error_msg)
    for y in (v for v, side in graph.nodes(data="bipartite") if side == 1):
        neighborhood = set(graph[y])
        if not neighborhood or not nx.is_connected(tree.subgraph(neighborhood)):
            return False
    return True


def _caterpillar_tree(structure, k):
    """Build the caterpillar as a networkx tree after checking its shape."""
    backbone = list(structure.backbone)
    if len(set(backbone)) != len(backbone):
        error_msg = "Backbone vertices must be distinct."
        raise ValueError(error_msg)
    tree = nx.Graph()
    tree.add_nodes_from(backbone)
    tree.add_edges_from(zip(backbone, backbone[1:], strict=False))
    seen = set(backbone)
    for spine in backbone:
        leaves = tuple(structure.pendants.get(spine, ()))
        if len(leaves) != k:
            error_msg = f"Backbone vertex {spine} carries {len(leaves)} pendants, "
            error_msg += f"expected {k}."
            raise ValueError(error_msg)
        for leaf in leaves:
            if leaf in seen:
                error_msg = f"Pendant {leaf} is not disjoint from the rest."
                raise ValueError(error_msg)
            seen.add(leaf)
            tree.add_edge(spine, leaf)
    stray = set(structure.pendants) - set(backbone)
    if stray:
        error_msg = "Pendants are attached to vertices outside the backbone."
        raise ValueError(error_msg)
    return tree


def classify_terminals(graph, x_terminals=(), y_terminals=()):
    """Decide which of the five terminal cases an instance falls into.

    Args:
        graph (ConvexBipartiteGraph): Host graph.
        x_terminals (iterable of int): Terminal X positions.
        y_terminals (iterable of int): Terminal Y indices.

    Returns:
        TerminalSpec: The case with the terminal sets.

    Raises:
        InfeasibleTerminalsError: If both sets are empty.
        IndexError: If a terminal is out of range.
    """
    xs = frozenset(x_terminals)
    ys = frozenset(y_terminals)
    if not xs and not ys:
        error_msg = "The terminal set must be nonempty."
        raise InfeasibleTerminalsError(error_msg)
    for p in xs:
        if not 1 <= p <= graph.m:
            error_msg = f"Terminal x{p} out of range 1..{graph.m}."
            raise IndexError(error_msg)
    for i in ys:
        if not 1 <= i <= graph.n:
            error_msg = f"Terminal y{i} out of range 1..{graph.n}."
            raise IndexError(error_msg)
    if xs and ys:
        case = TerminalCase.MIXED
    elif xs:
        case = TerminalCase.ALL_X if len(xs) == graph.m else TerminalCase.SUBSET_X
    else:
        case = TerminalCase.ALL_Y if len(ys) == graph.n else TerminalCase.SUBSET_Y
    return TerminalSpec(case=case, x_terminals=xs, y_terminals=ys)


def _validate_graph_type(graph):
    if not isinstance(graph, ConvexBipartiteGraph):
        error_msg = (
            f"graph must be a ConvexBipartiteGraph, got {type(graph).__name__}."
        )
        raise TypeError(error_msg)
