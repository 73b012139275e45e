"""This script deploys the reduction from vertex cover to Steiner sets on 1-star
caterpillar convex bipartite graphs.

For a graph G with edges e_1..e_m the reduced instance has
    V1: one vertex x<v> per vertex v of G (the Y' side),
    V2: pendants y<i>.1 and y<i>.2 per edge e_i, adjacent to both endpoints of e_i,
    V3: backbone vertices z<i>.1 and z<i>.2 per edge e_i, adjacent to all of V1.
The terminals are V2 together with z1.1 and the budget stays k.
"""

from dataclasses import dataclass

import networkx as nx

from convex_steiner.graphs.graph_core import CaterpillarStructure


@dataclass(frozen=True)
class VcReductionInstance:
    """Reduced Steiner instance of a vertex cover instance.

    Attributes:
        star_graph (nx.Graph): Bipartite graph with the networkx 'bipartite' node
            attribute, 0 for V2 and V3, 1 for V1.
        caterpillar (CaterpillarStructure): Backbone V3 with one V2 pendant each.
        terminals (frozenset of str): V2 and z1.1.
        budget (int): Steiner budget k'.
        vertex_map (dict): Vertex of G to its V1 label.
    """

    star_graph: nx.Graph
    caterpillar: CaterpillarStructure
    terminals: frozenset
    budget: int
    vertex_map: dict


def vc_to_caterpillar_stree(graph, k):
    """Reduce a vertex cover instance (G, k) to a Steiner instance.

    Args:
        graph (GeneralGraph): Graph with at least one edge.
        k (int): Vertex cover budget.

    Returns:
        VcReductionInstance: The reduced instance.

    Raises:
        ValueError: If the graph has no edge or k is negative.
    """
    _validate_vc_input(graph, k)
    vertex_map = {v: f"x{v}" for v in range(1, graph.vertex_count + 1)}
    star = nx.Graph()
    star.add_nodes_from(vertex_map.values(), bipartite=1)
    backbone = []
    pendants = {}
    for i, (u, v) in enumerate(graph.edges, start=1):
        for side in (1, 2):
            pendant, spine = f"y{i}.{side}", f"z{i}.{side}"
            star.add_node(pendant, bipartite=0)
            star.add_node(spine, bipartite=0)
            star.add_edges_from([(pendant, vertex_map[u]), (pendant, vertex_map[v])])
            backbone.append(spine)
            pendants[spine] = (pendant,)
    star.add_edges_from(
        (x, spine) for x in vertex_map.values() for spine in backbone
    )
    terminals = frozenset(pendants[spine][0] for spine in backbone) | {"z1.1"}
    return VcReductionInstance(
        star_graph=star,
        caterpillar=CaterpillarStructure(backbone=tuple(backbone), pendants=pendants),
        terminals=terminals,
        budget=k,
        vertex_map=vertex_map,
    )


def vertex_cover_to_steiner(instance, cover):
    """Map a vertex cover of G to the Steiner set of its V1 vertices."""
    return frozenset(instance.vertex_map[v] for v in cover)


def steiner_to_vertex_cover(instance, steiner_set):
    """Map a Steiner set of the reduced instance to the vertices of G it holds in V1."""
    labels = {label: v for v, label in instance.vertex_map.items()}
    return frozenset(labels[s] for s in steiner_set if s in labels)


def _validate_vc_input(graph, k):
    if not graph.edges:
        error_msg = "The vertex cover reduction needs at least one edge."
        raise ValueError(error_msg)
    if k < 0:
        error_msg = f"The budget k must be nonnegative, got {k}."
        raise ValueError(error_msg)
