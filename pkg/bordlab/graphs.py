"""
Multigraph Toolkit
Girth, isomorphism, automorphism groups and canonical labels for links and nerves
"""
from dataclasses import dataclass, field, asdict
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple
import logging

import networkx as nx
from networkx.algorithms import isomorphism as nxiso

from .config import config
from .errors import ValidationError

logger = logging.getLogger(__name__)

COLOR = 'color'
SPAN_COLORS = ('x', 'y')

_color_match = nxiso.categorical_multiedge_match(COLOR, None)


def make_multigraph(vertex_count: int, edges: Iterable[Sequence[int]],
                    colors: Optional[Sequence[str]] = None) -> nx.MultiGraph:
    """Multigraph on 0..vertex_count-1; optional per-edge span colors"""
    graph = nx.MultiGraph()
    graph.add_nodes_from(range(vertex_count))
    for i, (u, v) in enumerate(edges):
        if not (0 <= u < vertex_count and 0 <= v < vertex_count):
            raise ValidationError(f"edge ({u}, {v}) has an endpoint outside 0..{vertex_count - 1}")
        if colors is None:
            graph.add_edge(u, v)
        else:
            graph.add_edge(u, v, **{COLOR: colors[i]})
    return graph


def swap_colors(g: nx.MultiGraph) -> nx.MultiGraph:
    swapped = nx.MultiGraph()
    swapped.add_nodes_from(g.nodes(data=True))
    for u, v, d in g.edges(data=True):
        data = dict(d)
        data[COLOR] = 'y' if d.get(COLOR) == 'x' else 'x'
        swapped.add_edge(u, v, **data)
    return swapped


def color_class(g: nx.MultiGraph, color: str) -> nx.MultiGraph:
    """Spanning subgraph made of the edges of one color"""
    sub = nx.MultiGraph()
    sub.add_nodes_from(g.nodes())
    sub.add_edges_from((u, v, d) for u, v, d in g.edges(data=True) if d.get(COLOR) == color)
    return sub


def girth(g: nx.MultiGraph) -> float:
    """Shortest cycle length: loop 1, parallel pair 2, forest infinity"""
    if nx.number_of_selfloops(g) > 0:
        return 1
    simple = nx.Graph(g)
    if simple.number_of_edges() < g.number_of_edges():
        return 2
    return nx.girth(simple)


def iso_graph(a: nx.MultiGraph, b: nx.MultiGraph) -> Optional[Dict[Any, Any]]:
    """Vertex bijection preserving edge multiplicities, or None"""
    if a.number_of_nodes() != b.number_of_nodes() or a.number_of_edges() != b.number_of_edges():
        return None
    matcher = nxiso.MultiGraphMatcher(a, b)
    return next(matcher.isomorphisms_iter(), None)


def colored_iso(a: nx.MultiGraph, b: nx.MultiGraph,
                allow_color_swap: bool = False) -> Optional[Dict[Any, Any]]:
    """Color-preserving vertex bijection; with allow_color_swap also accept x <-> y"""
    if a.number_of_nodes() != b.number_of_nodes() or a.number_of_edges() != b.number_of_edges():
        return None
    targets = [b, swap_colors(b)] if allow_color_swap else [b]
    for target in targets:
        matcher = nxiso.MultiGraphMatcher(a, target, edge_match=_color_match)
        found = next(matcher.isomorphisms_iter(), None)
        if found is not None:
            return found
    return None


@dataclass
class AutomorphismGroup:
    """Automorphisms as permutations of the sorted vertex list"""
    order: int
    generators: List[Tuple[int, ...]] = field(default_factory=list)
    elements: List[Tuple[int, ...]] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        data = asdict(self)
        data.pop('elements')
        return data


def _closure(generators: List[Tuple[int, ...]], n: int) -> set:
    identity = tuple(range(n))
    group = {identity}
    frontier = [identity]
    while frontier:
        grown = []
        for p in frontier:
            for g in generators:
                q = tuple(g[p[i]] for i in range(n))
                if q not in group:
                    group.add(q)
                    grown.append(q)
        frontier = grown
    return group


def automorphisms(g: nx.MultiGraph, colored: bool = False,
                  allow_color_swap: bool = False) -> AutomorphismGroup:
    """Enumerate Aut(g) by VF2 and extract a generating set greedily"""
    limit = config.get('search', 'max_automorphism_vertices', default=64)
    if g.number_of_nodes() > limit:
        raise ValidationError(f"automorphism search is bounded to {limit} vertices, got {g.number_of_nodes()}")
    nodes = sorted(g.nodes())
    index = {v: i for i, v in enumerate(nodes)}
    targets = [g]
    if allow_color_swap:
        targets.append(swap_colors(g))
    elements = []
    for target in targets:
        match = _color_match if (colored or allow_color_swap) else None
        matcher = nxiso.MultiGraphMatcher(g, target, edge_match=match)
        for mapping in matcher.isomorphisms_iter():
            elements.append(tuple(index[mapping[v]] for v in nodes))
    elements = sorted(set(elements))
    generators: List[Tuple[int, ...]] = []
    span = {tuple(range(len(nodes)))}
    for element in elements:
        if element not in span:
            generators.append(element)
            span = _closure(generators, len(nodes))
    logger.debug(f"Aut: {len(elements)} elements, {len(generators)} generators")
    return AutomorphismGroup(order=len(elements), generators=generators, elements=elements)


def canonical_label(g: nx.MultiGraph, colored: bool = False) -> Tuple:
    """
    Certificate equal for two graphs iff they are isomorphic (color-preserving when colored).

    Color refinement followed by individualization of the first non-singleton
    cell; the certificate is the least sorted edge list over all leaves.
    """
    nodes = sorted(g.nodes())
    index = {v: i for i, v in enumerate(nodes)}
    n = len(nodes)
    edges = []
    adjacency: List[List[Tuple[int, str]]] = [[] for _ in range(n)]
    for u, v, d in g.edges(data=True):
        color = str(d.get(COLOR, '')) if colored else ''
        i, j = index[u], index[v]
        edges.append((i, j, color))
        adjacency[i].append((j, color))
        if i != j:
            adjacency[j].append((i, color))

    def refine(colors):
        while True:
            signatures = [(colors[i], tuple(sorted((colors[j], c) for j, c in adjacency[i])))
                          for i in range(n)]
            ranks = {s: r for r, s in enumerate(sorted(set(signatures)))}
            refined = [ranks[s] for s in signatures]
            if len(ranks) == len(set(colors)):
                return refined
            colors = refined

    best = [None]

    def search(colors):
        colors = refine(colors)
        cells: Dict[int, List[int]] = {}
        for i, c in enumerate(colors):
            cells.setdefault(c, []).append(i)
        target = min((c for c, members in cells.items() if len(members) > 1), default=None)
        if target is None:
            certificate = tuple(sorted((min(colors[i], colors[j]), max(colors[i], colors[j]), c)
                                       for i, j, c in edges))
            if best[0] is None or certificate < best[0]:
                best[0] = certificate
            return
        for v in cells[target]:
            split = [2 * c for c in colors]
            split[v] -= 1
            search(split)

    search([0] * n)
    return (n, best[0] if best[0] is not None else ())


def same_graph(a: nx.MultiGraph, b: nx.MultiGraph) -> bool:
    return iso_graph(a, b) is not None
