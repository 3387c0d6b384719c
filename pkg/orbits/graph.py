"""Orbit graphs: one vertex per orbit member, one edge per generator application."""

import logging
from typing import Dict, List

import networkx as nx

from orbits.orbit import Orbit
from utils.errors import EmptyOrbit, StructureMismatch

logger = logging.getLogger(__name__)


def build_graph(orbit: Orbit) -> nx.MultiGraph:
    """Undirected multigraph with loops; each vertex has degree 4.

    Vertices are member indices. Every edge carries the generator ``label``
    and its ``source`` endpoint so the directed structure can be recovered.
    """
    if not orbit.members:
        raise EmptyOrbit("orbit has no members")
    graph = nx.MultiGraph(generators=orbit.generators, stratum=str(orbit.stratum))
    for i, member in enumerate(orbit.members):
        graph.add_node(i, digest=member.digest, origami=str(member.origami))
    for symbol, targets in orbit.edges.items():
        for i, j in enumerate(targets):
            graph.add_edge(i, j, label=symbol, source=i)

    bad = [v for v, d in graph.degree() if d != 4]
    if bad:
        raise StructureMismatch(f"vertices {bad[:5]} are not 4-valent")
    if not nx.is_connected(graph):
        raise StructureMismatch("orbit graph is not connected")
    logger.debug("graph with %d vertices, %d edges", graph.number_of_nodes(), graph.number_of_edges())
    return graph


def loop_counts(graph: nx.MultiGraph) -> Dict[str, int]:
    counts: Dict[str, int] = {}
    for u, v, label in graph.edges(data="label"):
        if u == v:
            counts[label] = counts.get(label, 0) + 1
    return counts


def multiplicity_table(graph: nx.MultiGraph) -> Dict[frozenset, int]:
    """Edge multiplicity per unordered vertex pair, loops excluded."""
    table: Dict[frozenset, int] = {}
    for u, v in graph.edges():
        if u != v:
            pair = frozenset((u, v))
            table[pair] = table.get(pair, 0) + 1
    return table


def neighbours(graph: nx.MultiGraph, vertex: int) -> List[int]:
    return sorted(set(graph.neighbors(vertex)) - {vertex})
