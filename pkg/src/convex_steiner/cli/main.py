"""This script deploys the command-line entry point.

Every command writes one JSON report to standard output and a short human summary
to standard error. The exit status tells the outcome apart:
    0  success
    1  a check failed (trace diff, validation, oracle disagreement)
    2  the instance could not be read or parsed
    3  the input is infeasible (disconnected graph, bad terminals, bad values)
    4  the oracle size guard was exceeded
    5  an internal assertion failed
"""

import argparse
import hashlib
import json
import logging
import sys
import time
from pathlib import Path

import networkx as nx

from convex_steiner.cli.formats import (
    parse_document,
    serialize_document,
    serialize_instance,
)
from convex_steiner.config import (
    FIXTURES,
    ORACLE_MAX_COVER_VERTICES,
    ORACLE_MAX_DOMINATING_VERTICES,
    ORACLE_MAX_STEINER_CANDIDATES,
    SEED,
    TERMINAL_CASES,
)
from convex_steiner.data.generators import (
    GenConfig,
    gen_convex_bipartite,
    gen_general_graph,
    gen_interval_family,
    gen_terminals,
)
from convex_steiner.errors import (
    DisconnectedGraphError,
    InfeasibleTerminalsError,
    InstanceParseError,
    OracleScaleError,
    TableInconsistencyError,
)
from convex_steiner.experiments.paper_traces import replay_paper_traces
from convex_steiner.graphs.graph_core import (
    CaterpillarStructure,
    ConvexBipartiteGraph,
    GeneralGraph,
    IntervalGraphModel,
    TerminalCase,
    Vertex,
    as_networkx,
    classify_terminals,
    validate_convex,
    validate_k_star_caterpillar_convex,
)
from convex_steiner.oracle.oracle import (
    min_dominating_brute,
    min_steiner_brute,
    min_vertex_cover_brute,
)
from convex_steiner.reductions.dispatch import solve_general
from convex_steiner.reductions.domination import dominating_set_via_stree
from convex_steiner.reductions.interval import solve_interval_steiner
from convex_steiner.reductions.vertex_cover import vc_to_caterpillar_stree
from convex_steiner.solvers.steiner_dp import compute_table, table_dump

logger = logging.getLogger("convex_steiner")

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_PARSE_ERROR = 2
EXIT_INFEASIBLE = 3
EXIT_ORACLE_SCALE = 4
EXIT_INTERNAL = 5


def main():
    logging.basicConfig(
        stream=sys.stderr, level=logging.INFO, format="%(levelname)s %(message)s"
    )
    sys.exit(run(sys.argv[1:]))


def run(argv):
    """Run one command and print its JSON report.

    Args:
        argv (list of str): Command-line arguments without the program name.

    Returns:
        int: Exit status.
    """
    args = build_parser().parse_args(argv)
    started = time.perf_counter()
    try:
        status, report = args.handler(args)
    except InstanceParseError as error:
        status = EXIT_PARSE_ERROR
        report = _error_report("parse", error, line=error.line, column=error.column)
    except OSError as error:
        status, report = EXIT_PARSE_ERROR, _error_report("read", error)
    except OracleScaleError as error:
        status, report = EXIT_ORACLE_SCALE, _error_report("oracle_scale", error)
    except (
        DisconnectedGraphError,
        InfeasibleTerminalsError,
        IndexError,
        TypeError,
        ValueError,
    ) as error:
        status, report = EXIT_INFEASIBLE, _error_report("infeasible", error)
    except (AssertionError, TableInconsistencyError) as error:
        status, report = EXIT_INTERNAL, _error_report("internal", error)
    if "error" in report:
        logger.error("%s: %s", args.command, report["error"]["message"])
    report = {"command": ["convex-steiner", *argv], **report}
    if args.command != "paper-traces":
        report["timing"] = {"seconds": time.perf_counter() - started}
    sys.stdout.write(json.dumps(report, indent=2, sort_keys=True) + "\n")
    return status


def build_parser():
    parser = argparse.ArgumentParser(
        prog="convex-steiner",
        description="Exact Steiner sets on convex bipartite graphs.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    solve = commands.add_parser("solve", help="Solve any terminal case.")
    _add_graph_argument(solve)
    _add_terminal_arguments(solve)
    solve.add_argument(
        "--oracle", action="store_true", help="Compare with the oracle."
    )
    solve.add_argument(
        "--format",
        choices=["json", "tsv"],
        help="Include the dynamic program table in this format (subset_y only).",
    )
    solve.add_argument(
        "--max-candidates", type=int, default=ORACLE_MAX_STEINER_CANDIDATES
    )
    solve.set_defaults(handler=_solve)

    oracle = commands.add_parser("oracle", help="Run an exhaustive baseline.")
    _add_graph_argument(oracle)
    _add_terminal_arguments(oracle)
    oracle.add_argument(
        "--problem", choices=["steiner", "cover", "dominating"], default="steiner"
    )
    oracle.add_argument("--max-vertices", type=int, default=None)
    oracle.set_defaults(handler=_oracle)

    gen = commands.add_parser("gen", help="Generate a random instance.")
    gen.add_argument("--kind", choices=["cbg", "ivl", "g"], default="cbg")
    gen.add_argument("--m", type=int, default=6, help="X side, or span of ivl.")
    gen.add_argument("--n", type=int, default=4, help="Y side, or vertices.")
    gen.add_argument("--seed", type=int, default=SEED)
    gen.add_argument("--density", type=float, default=0.35)
    gen.add_argument("--edge-probability", type=float, default=0.4)
    gen.add_argument("--case", choices=TERMINAL_CASES, default=None)
    gen.add_argument("--output", type=Path, default=None)
    gen.set_defaults(handler=_gen)

    reduce = commands.add_parser("reduce", help="Transform and solve.")
    reductions = reduce.add_subparsers(dest="reduction", required=True)
    vc = reductions.add_parser("vc", help="Vertex cover to Steiner tree.")
    _add_graph_argument(vc)
    vc.add_argument("--k", type=int, default=None, help="Budget, default min cover.")
    vc.add_argument("--solve", action="store_true", help="Run both oracles.")
    vc.add_argument("--output", type=Path, default=None)
    vc.set_defaults(handler=_reduce_vc)
    interval = reductions.add_parser("interval", help="Interval graph Steiner tree.")
    _add_graph_argument(interval)
    interval.add_argument("--terminals", type=int, nargs="+", required=True)
    interval.add_argument("--oracle", action="store_true")
    interval.set_defaults(handler=_reduce_interval)
    dominate = reductions.add_parser("dominate", help="Dominating set via Steiner.")
    _add_graph_argument(dominate)
    dominate.add_argument("--oracle", action="store_true")
    dominate.set_defaults(handler=_reduce_dominate)

    validate = commands.add_parser("validate", help="Check convexity or caterpillar.")
    _add_graph_argument(validate)
    validate.set_defaults(handler=_validate)

    traces = commands.add_parser("paper-traces", help="Replay the worked instances.")
    traces.add_argument("--fixtures", type=Path, default=FIXTURES)
    traces.set_defaults(handler=_paper_traces)
    return parser


def _add_graph_argument(parser):
    parser.add_argument("--graph", type=Path, required=True, help="Instance file.")


def _add_terminal_arguments(parser):
    parser.add_argument(
        "--terminals",
        choices=["file", "all-x", "all-y"],
        default="file",
        help="Take terminals from the 't' lines, all of X or all of Y.",
    )
    parser.add_argument("--x", type=int, nargs="*", default=None, help="X positions.")
    parser.add_argument("--y", type=int, nargs="*", default=None, help="Y indices.")


def _solve(args):
    document, graph = _read_convex(args.graph)
    terminal_spec = _select_terminals(document, args)
    terminals = terminal_spec.vertices
    result = solve_general(graph, terminals)
    report = {"digest": _digest(document), "result": result_to_dict(result)}
    report["result"]["case"] = terminal_spec.case.value
    status = EXIT_OK
    if args.oracle:
        oracle = min_steiner_brute(graph, terminals, args.max_candidates)
        report["oracle"] = _oracle_to_dict(oracle, result.size)
        status = EXIT_OK if oracle.optimum == result.size else EXIT_CHECK_FAILED
    if args.format:
        if terminal_spec.case is TerminalCase.SUBSET_Y:
            table = compute_table(graph, terminal_spec.y_terminals)
            dump = table_dump(table, args.format)
            report["table"] = json.loads(dump) if args.format == "json" else dump
        else:
            logger.warning("No table for terminal case %s.", terminal_spec.case.value)
    logger.info(
        "solve: case %s, %d terminals, Steiner set of size %d via %s",
        terminal_spec.case.value,
        len(terminals),
        result.size,
        result.algorithm,
    )
    return status, report


def _oracle(args):
    document = _read(args.graph)
    graph = document.instance
    report = {"digest": _digest(document), "problem": args.problem}
    if args.problem == "steiner":
        if not isinstance(graph, ConvexBipartiteGraph):
            error_msg = "The Steiner oracle command expects a cbg instance."
            raise InfeasibleTerminalsError(error_msg)
        terminals = _select_terminals(document, args).vertices
        limit = _max_vertices(args, ORACLE_MAX_STEINER_CANDIDATES)
        oracle = min_steiner_brute(graph, terminals, limit)
    elif args.problem == "cover":
        oracle = min_vertex_cover_brute(
            graph, _max_vertices(args, ORACLE_MAX_COVER_VERTICES)
        )
    else:
        oracle = min_dominating_brute(
            graph, _max_vertices(args, ORACLE_MAX_DOMINATING_VERTICES)
        )
    report["oracle"] = _oracle_to_dict(oracle)
    logger.info("oracle: %s optimum %d", args.problem, oracle.optimum)
    return EXIT_OK, report


def _max_vertices(args, default):
    return default if args.max_vertices is None else args.max_vertices


def _gen(args):
    if args.kind == "cbg":
        graph = gen_convex_bipartite(
            GenConfig(seed=args.seed, m=args.m, n=args.n, density=args.density)
        )
        xs, ys = (), ()
        if args.case:
            terminal_spec = gen_terminals(graph, args.case, args.seed)
            xs, ys = terminal_spec.x_terminals, terminal_spec.y_terminals
        text = serialize_instance(graph, xs, ys)
    elif args.kind == "ivl":
        model = gen_interval_family(
            GenConfig(seed=args.seed, m=args.m, n=args.n, density=args.density)
        )
        text = serialize_instance(model)
    else:
        general = gen_general_graph(args.seed, args.n, args.edge_probability)
        text = serialize_instance(general)
    if args.output is not None:
        args.output.write_text(text, encoding="utf-8")
    logger.info("gen: %s instance with seed %d", args.kind, args.seed)
    return EXIT_OK, {"digest": _digest_text(text), "instance": text}


def _reduce_vc(args):
    document = _read(args.graph)
    graph = document.instance
    if not isinstance(graph, GeneralGraph):
        error_msg = "The vertex cover reduction expects a g instance."
        raise ValueError(error_msg)
    cover = None
    k = args.k
    if k is None or args.solve:
        cover = min_vertex_cover_brute(graph)
        k = cover.optimum if k is None else k
    instance = vc_to_caterpillar_stree(graph, k)
    reduced, caterpillar, ids = relabel_reduction(instance)
    text = serialize_instance(reduced, caterpillar=caterpillar, k=1)
    if args.output is not None:
        args.output.write_text(text, encoding="utf-8")
    report = {
        "digest": _digest(document),
        "instance": text,
        "labels": {str(ident): label for label, ident in ids.items()},
        "terminals": sorted(ids[t] for t in instance.terminals),
        "budget": instance.budget,
        "caterpillar": validate_k_star_caterpillar_convex(
            instance.star_graph, instance.caterpillar, 1
        ),
    }
    status = EXIT_OK if report["caterpillar"] else EXIT_CHECK_FAILED
    if args.solve:
        steiner = min_steiner_brute(instance.star_graph, instance.terminals)
        report["oracle"] = {
            "min_cover": cover.optimum,
            "min_steiner": steiner.optimum,
            "equivalent": cover.optimum == steiner.optimum,
        }
        if not report["oracle"]["equivalent"]:
            status = EXIT_CHECK_FAILED
    logger.info(
        "reduce vc: %d vertices, %d terminals, budget %d",
        len(ids),
        len(instance.terminals),
        instance.budget,
    )
    return status, report


def _reduce_interval(args):
    document = _read(args.graph)
    model = document.instance
    if not isinstance(model, IntervalGraphModel):
        error_msg = "The interval reduction expects an ivl instance."
        raise ValueError(error_msg)
    result = solve_interval_steiner(model, args.terminals)
    report = {"digest": _digest(document), "result": result_to_dict(result)}
    status = EXIT_OK
    if args.oracle:
        oracle = min_steiner_brute(model, args.terminals)
        report["oracle"] = _oracle_to_dict(oracle, result.size)
        status = EXIT_OK if oracle.optimum == result.size else EXIT_CHECK_FAILED
    logger.info("reduce interval: Steiner set of size %d", result.size)
    return status, report


def _reduce_dominate(args):
    document, graph = _read_convex(args.graph)
    dominating = dominating_set_via_stree(graph)
    report = {
        "digest": _digest(document),
        "result": {"dominating_set": _labels(dominating), "size": len(dominating)},
    }
    if args.oracle:
        oracle = min_dominating_brute(graph)
        report["oracle"] = _oracle_to_dict(oracle, len(dominating))
    logger.info("reduce dominate: dominating set of size %d", len(dominating))
    return EXIT_OK, report


def _validate(args):
    document = _read(args.graph)
    graph = document.instance
    report = {"digest": _digest(document)}
    if isinstance(graph, ConvexBipartiteGraph):
        validation = validate_convex(graph)
        report["convex"] = {
            "ok": validation.ok,
            "violations": list(validation.violations),
            "connected": validation.connected,
        }
        ok = validation.ok
        host = as_networkx(graph)
    elif isinstance(graph, IntervalGraphModel):
        host = as_networkx(graph)
        ok = nx.is_connected(host)
        report["interval"] = {"connected": ok}
    else:
        host = as_networkx(graph)
        ok = True
    if document.caterpillar is not None:
        if not isinstance(graph, ConvexBipartiteGraph):
            host = _sided_by_caterpillar(host, document.caterpillar)
        bipartite = all(
            host.nodes[u]["bipartite"] != host.nodes[v]["bipartite"]
            for u, v in host.edges
        )
        subtrees = bipartite and validate_k_star_caterpillar_convex(
            host, document.caterpillar, document.k
        )
        report["caterpillar"] = {"k": document.k, "ok": subtrees}
        ok = ok and subtrees
    report["ok"] = ok
    logger.info("validate: %s", "ok" if ok else "failed")
    return (EXIT_OK if ok else EXIT_CHECK_FAILED), report


def _paper_traces(args):
    report = replay_paper_traces(args.fixtures)
    for name, entry in report.items():
        if name != "ok":
            logger.info("paper-traces %s: %d differences", name, len(entry["diff"]))
    return (EXIT_OK if report["ok"] else EXIT_CHECK_FAILED), {"result": report}


def result_to_dict(result):
    """Convert a SteinerResult into JSON-ready values with string vertex labels."""
    return {
        "algorithm": result.algorithm,
        "size": result.size,
        "steiner_set": _labels(result.steiner_set),
        "tree_edges": [[_label(u), _label(v)] for u, v in result.tree_edges],
        "trace": list(result.trace),
    }


def relabel_reduction(instance):
    """Number the vertices of a reduced vertex cover instance 1..N.

    V1 comes first in vertex order, then each backbone vertex followed by its
    pendant.

    Returns:
        tuple: (GeneralGraph, CaterpillarStructure over the ids, label to id map).
    """
    caterpillar = instance.caterpillar
    labels = list(instance.vertex_map.values())
    for spine in caterpillar.backbone:
        labels += [spine, *caterpillar.pendants[spine]]
    ids = {label: ident for ident, label in enumerate(labels, start=1)}
    edges = sorted(
        tuple(sorted((ids[u], ids[v]))) for u, v in instance.star_graph.edges
    )
    reduced = GeneralGraph(vertex_count=len(ids), edges=tuple(edges))
    structure = CaterpillarStructure(
        backbone=tuple(ids[spine] for spine in caterpillar.backbone),
        pendants={
            ids[spine]: tuple(ids[p] for p in caterpillar.pendants[spine])
            for spine in caterpillar.backbone
        },
    )
    return reduced, structure, ids


def _read(path):
    return parse_document(path.read_text(encoding="utf-8"))


def _read_convex(path):
    document = _read(path)
    if not isinstance(document.instance, ConvexBipartiteGraph):
        error_msg = f"{path} is not a cbg instance."
        raise ValueError(error_msg)
    return document, document.instance


def _select_terminals(document, args):
    graph = document.instance
    if args.terminals == "all-x":
        xs, ys = range(1, graph.m + 1), ()
    elif args.terminals == "all-y":
        xs, ys = (), range(1, graph.n + 1)
    else:
        xs, ys = document.x_terminals, document.y_terminals
    if args.x is not None:
        xs = args.x
    if args.y is not None:
        ys = args.y
    return classify_terminals(graph, xs, ys)


def _sided_by_caterpillar(host, caterpillar):
    """Copy of host with bipartite 0 on caterpillar vertices and 1 elsewhere."""
    members = set(caterpillar.backbone)
    for leaves in caterpillar.pendants.values():
        members.update(leaves)
    sided = host.copy()
    sides = {v: int(v not in members) for v in sided}
    nx.set_node_attributes(sided, sides, "bipartite")
    return sided


def _oracle_to_dict(oracle, solver_size=None):
    payload = {
        "optimum": oracle.optimum,
        "witness": _labels(oracle.witness),
        "explored": oracle.explored,
    }
    if solver_size is not None:
        payload["matches_solver"] = oracle.optimum == solver_size
    return payload


def _label(vertex):
    return str(vertex) if isinstance(vertex, Vertex) else vertex


def _labels(vertex_set):
    return [_label(v) for v in sorted(vertex_set)]


def _digest(document):
    return _digest_text(serialize_document(document))


def _digest_text(text):
    return hashlib.sha256(text.encode("utf-8")).hexdigest()[:16]


def _error_report(kind, error, **location):
    return {"error": {"kind": kind, "message": str(error), **location}}

