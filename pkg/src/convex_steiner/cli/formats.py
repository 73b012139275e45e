"""This script deploys the line-oriented instance formats.

All formats are 1-based; '#' starts a comment.
    cbg <m> <n>        then n lines  y <id> <l> <r>
                       optional      t x <positions...>  /  t y <ids...>
    ivl <n>            then n lines  v <id> <left> <right>
    g <n> <m>          then m lines  e <u> <v>
    cat <k>            caterpillar sidecar, then  bb <ids...>  and per backbone
                       vertex  pd <bb-id> <pendant ids...>
"""

import re
from dataclasses import dataclass

from convex_steiner.errors import InstanceParseError
from convex_steiner.graphs.graph_core import (
    CaterpillarStructure,
    ConvexBipartiteGraph,
    GeneralGraph,
    IntervalGraphModel,
    parse_vertex,
)

_TOKEN = re.compile(r"\S+")


@dataclass(frozen=True)
class Document:
    """Parsed instance file.

    Attributes:
        instance (ConvexBipartiteGraph | IntervalGraphModel | GeneralGraph): Graph.
        x_terminals (tuple of int): Terminal X positions from 't x' lines.
        y_terminals (tuple of int): Terminal Y indices from 't y' lines.
        caterpillar (CaterpillarStructure | None): Sidecar structure.
        k (int | None): Pendants per backbone vertex declared by 'cat'.
    """

    instance: object
    x_terminals: tuple = ()
    y_terminals: tuple = ()
    caterpillar: CaterpillarStructure | None = None
    k: int | None = None


@dataclass(frozen=True)
class _Token:
    text: str
    line: int
    column: int


def parse_instance(text):
    """Parse the graph of an instance file.

    Args:
        text (str): File contents.

    Returns:
        ConvexBipartiteGraph | IntervalGraphModel | GeneralGraph: The graph.

    Raises:
        InstanceParseError: On malformed input, with line and column.
    """
    return parse_document(text).instance


def parse_document(text):
    """Parse an instance file including terminal lines and caterpillar sidecar.

    Args:
        text (str): File contents.

    Returns:
        Document: The parsed document.

    Raises:
        InstanceParseError: On malformed input, with line and column.
    """
    lines = _tokenize(text)
    if not lines:
        raise InstanceParseError("empty instance", 1, 1)
    header, *body = lines
    kind = header[0]
    parsers = {"cbg": _parse_cbg, "ivl": _parse_ivl, "g": _parse_general}
    if kind.text not in parsers:
        message = f"unknown format '{kind.text}', expected cbg, ivl or g"
        raise InstanceParseError(message, kind.line, kind.column)
    graph_lines, sidecar = _split_sidecar(body)
    document = parsers[kind.text](header, graph_lines)
    if sidecar:
        caterpillar, k = _parse_caterpillar(sidecar)
        document = Document(
            instance=document.instance,
            x_terminals=document.x_terminals,
            y_terminals=document.y_terminals,
            caterpillar=caterpillar,
            k=k,
        )
    return document


def serialize_instance(
    instance, x_terminals=(), y_terminals=(), caterpillar=None, k=None
):
    """Write an instance in canonical form.

    Args:
        instance (ConvexBipartiteGraph | IntervalGraphModel | GeneralGraph): Graph.
        x_terminals (iterable of int): Terminal X positions (cbg only).
        y_terminals (iterable of int): Terminal Y indices (cbg only).
        caterpillar (CaterpillarStructure, optional): Sidecar structure.
        k (int, optional): Pendants per backbone vertex.

    Returns:
        str: Canonical text ending with a newline.

    Raises:
        TypeError: If the instance type is unsupported.
    """
    if isinstance(instance, ConvexBipartiteGraph):
        lines = [f"cbg {instance.m} {instance.n}"]
        lines += [
            f"y {i} {left} {right}"
            for i, (left, right) in enumerate(instance.intervals, start=1)
        ]
        if x_terminals:
            lines.append("t x " + " ".join(map(str, sorted(x_terminals))))
        if y_terminals:
            lines.append("t y " + " ".join(map(str, sorted(y_terminals))))
    elif isinstance(instance, IntervalGraphModel):
        lines = [f"ivl {instance.n}"]
        lines += [
            f"v {i} {left} {right}"
            for i, (left, right) in enumerate(instance.intervals, start=1)
        ]
    elif isinstance(instance, GeneralGraph):
        lines = [f"g {instance.vertex_count} {len(instance.edges)}"]
        lines += [f"e {u} {v}" for u, v in instance.edges]
    else:
        error_msg = f"Cannot serialize {type(instance).__name__}."
        raise TypeError(error_msg)
    if caterpillar is not None:
        lines.append(f"cat {k}")
        lines.append("bb " + " ".join(map(str, caterpillar.backbone)))
        for spine in caterpillar.backbone:
            leaves = caterpillar.pendants.get(spine, ())
            if leaves:
                lines.append(f"pd {spine} " + " ".join(map(str, leaves)))
    return "\n".join(lines) + "\n"


def serialize_document(document):
    return serialize_instance(
        document.instance,
        document.x_terminals,
        document.y_terminals,
        document.caterpillar,
        document.k,
    )


def canonical_form(text):
    """Canonical text of an instance file: no comments, sorted records."""
    return serialize_document(parse_document(text))


def _tokenize(text):
    """Split text into lines of tokens, dropping comments and blank lines."""
    lines = []
    for number, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0]
        tokens = [
            _Token(match.group(), number, match.start() + 1)
            for match in _TOKEN.finditer(content)
        ]
        if tokens:
            lines.append(tokens)
    return lines


def _split_sidecar(body):
    for position, tokens in enumerate(body):
        if tokens[0].text == "cat":
            return body[:position], body[position:]
    return body, []


def _integer(token, minimum=None):
    try:
        value = int(token.text)
    except ValueError:
        message = f"expected an integer, got '{token.text}'"
        raise InstanceParseError(message, token.line, token.column) from None
    if minimum is not None and value < minimum:
        message = f"expected an integer >= {minimum}, got {value}"
        raise InstanceParseError(message, token.line, token.column)
    return value


def _expect_arity(tokens, arity):
    if len(tokens) != arity:
        last = tokens[-1]
        given = len(tokens) - 1
        message = f"'{tokens[0].text}' takes {arity - 1} values, got {given}"
        raise InstanceParseError(message, last.line, last.column)


def _records(lines, keyword, count, header):
    """Collect '<keyword> <id> <a> <b>' records with ids exactly 1..count."""
    records = {}
    for tokens in lines:
        first = tokens[0]
        if first.text != keyword:
            continue
        _expect_arity(tokens, 4)
        ident = _integer(tokens[1], minimum=1)
        if ident > count:
            message = f"id {ident} exceeds the declared count {count}"
            raise InstanceParseError(message, tokens[1].line, tokens[1].column)
        if ident in records:
            message = f"duplicate id {ident}"
            raise InstanceParseError(message, tokens[1].line, tokens[1].column)
        records[ident] = tokens
    if len(records) != count:
        message = f"declared {count} '{keyword}' records, found {len(records)}"
        raise InstanceParseError(message, header.line, header.column)
    return records


def _reject_unknown(lines, allowed):
    for tokens in lines:
        if tokens[0].text not in allowed:
            first = tokens[0]
            message = f"unexpected record '{first.text}'"
            raise InstanceParseError(message, first.line, first.column)


def _parse_cbg(header, lines):
    _expect_arity(header, 3)
    m = _integer(header[1], minimum=1)
    n = _integer(header[2], minimum=0)
    _reject_unknown(lines, {"y", "t"})
    records = _records(lines, "y", n, header[0])
    intervals = []
    for ident in range(1, n + 1):
        tokens = records[ident]
        left = _integer(tokens[2], minimum=1)
        right = _integer(tokens[3])
        if left > right:
            message = f"interval of y{ident} has l={left} > r={right}"
            raise InstanceParseError(message, tokens[2].line, tokens[2].column)
        if right > m:
            message = f"interval of y{ident} has r={right} > m={m}"
            raise InstanceParseError(message, tokens[3].line, tokens[3].column)
        intervals.append((left, right))
    x_terminals, y_terminals = set(), set()
    for tokens in (t for t in lines if t[0].text == "t"):
        if len(tokens) < 3 or tokens[1].text not in {"x", "y"}:
            message = "terminal lines read 't x <positions...>' or 't y <ids...>'"
            raise InstanceParseError(message, tokens[0].line, tokens[0].column)
        bound = m if tokens[1].text == "x" else n
        target = x_terminals if tokens[1].text == "x" else y_terminals
        for token in tokens[2:]:
            value = _integer(token, minimum=1)
            if value > bound:
                message = f"terminal {tokens[1].text}{value} out of range 1..{bound}"
                raise InstanceParseError(message, token.line, token.column)
            target.add(value)
    return Document(
        instance=ConvexBipartiteGraph(m=m, intervals=tuple(intervals)),
        x_terminals=tuple(sorted(x_terminals)),
        y_terminals=tuple(sorted(y_terminals)),
    )


def _parse_ivl(header, lines):
    _expect_arity(header, 2)
    n = _integer(header[1], minimum=1)
    _reject_unknown(lines, {"v"})
    records = _records(lines, "v", n, header[0])
    intervals = []
    for ident in range(1, n + 1):
        tokens = records[ident]
        left, right = _integer(tokens[2]), _integer(tokens[3])
        if left > right:
            message = f"interval of v{ident} has left={left} > right={right}"
            raise InstanceParseError(message, tokens[2].line, tokens[2].column)
        intervals.append((left, right))
    return Document(instance=IntervalGraphModel(intervals=tuple(intervals)))


def _parse_general(header, lines):
    _expect_arity(header, 3)
    vertex_count = _integer(header[1], minimum=1)
    edge_count = _integer(header[2], minimum=0)
    _reject_unknown(lines, {"e"})
    edges, seen = [], set()
    for tokens in lines:
        _expect_arity(tokens, 3)
        u, v = _integer(tokens[1], minimum=1), _integer(tokens[2], minimum=1)
        for token, value in ((tokens[1], u), (tokens[2], v)):
            if value > vertex_count:
                message = f"vertex {value} exceeds the declared count {vertex_count}"
                raise InstanceParseError(message, token.line, token.column)
        if u == v:
            message = f"self-loop on vertex {u}"
            raise InstanceParseError(message, tokens[1].line, tokens[1].column)
        if frozenset((u, v)) in seen:
            message = f"duplicate edge {u} {v}"
            raise InstanceParseError(message, tokens[1].line, tokens[1].column)
        seen.add(frozenset((u, v)))
        edges.append((u, v))
    if len(edges) != edge_count:
        message = f"declared {edge_count} edges, found {len(edges)}"
        raise InstanceParseError(message, header[0].line, header[0].column)
    return Document(
        instance=GeneralGraph(vertex_count=vertex_count, edges=tuple(edges))
    )


def _parse_caterpillar(lines):
    """Parse 'cat', 'bb' and 'pd' lines into a structure and its k."""
    head, *rest = lines
    _expect_arity(head, 2)
    k = _integer(head[1], minimum=0)
    backbone_lines = [t for t in rest if t[0].text == "bb"]
    _reject_unknown(rest, {"bb", "pd"})
    if len(backbone_lines) != 1:
        message = "the caterpillar sidecar needs exactly one 'bb' line"
        raise InstanceParseError(message, head[0].line, head[0].column)
    backbone = tuple(_caterpillar_id(t) for t in backbone_lines[0][1:])
    pendants = {spine: () for spine in backbone}
    for tokens in (t for t in rest if t[0].text == "pd"):
        if len(tokens) < 2:
            message = "'pd' needs a backbone id"
            raise InstanceParseError(message, tokens[0].line, tokens[0].column)
        spine = _caterpillar_id(tokens[1])
        if spine not in pendants:
            message = f"'{tokens[1].text}' is not on the backbone"
            raise InstanceParseError(message, tokens[1].line, tokens[1].column)
        pendants[spine] = tuple(_caterpillar_id(t) for t in tokens[2:])
    return CaterpillarStructure(backbone=backbone, pendants=pendants), k


def _caterpillar_id(token):
    """Integer ids for general graphs, Vertex ids for x/y labels, text otherwise."""
    if token.text.isdigit():
        return int(token.text)
    try:
        return parse_vertex(token.text)
    except ValueError:
        return token.text
