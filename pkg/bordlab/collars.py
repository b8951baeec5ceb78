"""
Collars and Nerves
Separating collars between two vertices, their span-colored nerves, boundaries and predicates
"""
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Dict, List, Optional, Tuple
import logging

import networkx as nx
from networkx.utils import UnionFind

from .catalog import identify_graph, identify_nerve
from .complex import Complex, HEAD, TAIL
from .errors import ValidationError
from .graphs import COLOR, canonical_label, color_class, make_multigraph, swap_colors

logger = logging.getLogger(__name__)


@dataclass
class Collar:
    """
    Collar closure between span vertices x and y.

    Nerve nodes are the crossing edges (sorted by label); nerve edge i comes
    from faces[i], joins its two crossing edges and is colored by the vertex
    at which they meet. loops[i] is the third edge of faces[i].
    """
    host: Complex
    x: Optional[int]
    y: Optional[int]
    faces: List[int] = field(default_factory=list)
    crossing_edges: List[int] = field(default_factory=list)
    loops: List[int] = field(default_factory=list)
    nerve: nx.MultiGraph = field(default_factory=nx.MultiGraph)

    @property
    def colors(self) -> List[str]:
        return [d[COLOR] for _, _, d in sorted(self.nerve.edges(data=True), key=lambda e: e[2]['index'])]

    @property
    def is_empty(self) -> bool:
        return not self.faces

    def closure(self) -> Complex:
        return self.host.sub(self.faces)

    def loops_at(self, color: str) -> List[int]:
        """Loop edges of the faces whose crossing edges meet at the other span vertex"""
        return [loop for loop, c in zip(self.loops, self.colors) if c != color]

    def to_dict(self) -> Dict[str, Any]:
        kind = classify_nerve(self)
        data = {
            'x': self.x,
            'y': self.y,
            'faces': list(self.faces),
            'face_words': [list(self.host.words[f]) for f in self.faces],
            'crossing_edges': list(self.crossing_edges),
            'nerve': nerve_edges(self.nerve),
            'type': kind or 'unknown',
        }
        if kind is None and not self.is_empty:
            n, edges = canonical_label(self.nerve, colored=True)
            data['canonical_nerve'] = {'vertices': n, 'edges': [list(e) for e in edges]}
        return data


def nerve_edges(g: nx.MultiGraph) -> List[List[Any]]:
    rows = sorted(g.edges(data=True), key=lambda e: e[2].get('index', 0))
    return [[u, v, d.get(COLOR)] for u, v, d in rows]


def _adjacent(c: Complex, x: int, y: int) -> bool:
    return any(set(c.edge_vertices(e)) == {x, y} for e in c.edges)


def separating_collar(c: Complex, x: int, y: int) -> Collar:
    """Faces whose corners are exactly {x, y}, with the nerve of their crossing edges"""
    c.check_vertex(x)
    c.check_vertex(y)
    if x == y:
        raise ValidationError("collar span vertices must be distinct")
    if not _adjacent(c, x, y):
        raise ValidationError(f"vertices {x} and {y} are not adjacent")
    selected = []
    for f in range(len(c.faces)):
        corners = set(c.corner_vertices(f))
        if x in corners and y in corners and len(c.words[f]) != 3:
            raise ValidationError(f"face {f} meets {x} and {y} but is not a triangle")
        if corners == {x, y}:
            selected.append(f)

    records = []
    crossing = set()
    for f in selected:
        word = c.words[f]
        corners = c.corner_vertices(f)
        cross = [j for j, s in enumerate(word) if not c.is_loop(abs(s))]
        if len(cross) != 2:
            raise ValidationError(f"face {f} has {len(cross)} crossing edges")
        # corner j lies between letters j and j+1
        apex = next(corners[j] for j in range(3) if j in cross and (j + 1) % 3 in cross)
        loop = next(abs(s) for j, s in enumerate(word) if j not in cross)
        a, b = (abs(word[j]) for j in cross)
        crossing.update((a, b))
        records.append((a, b, 'x' if apex == x else 'y', loop))

    crossing_edges = sorted(crossing)
    index = {e: i for i, e in enumerate(crossing_edges)}
    nerve = nx.MultiGraph()
    for i, e in enumerate(crossing_edges):
        nerve.add_node(i, label=e)
    for i, (a, b, color, _) in enumerate(records):
        nerve.add_edge(index[a], index[b], **{COLOR: color, 'index': i})
    logger.debug(f"Collar between {x} and {y}: {len(selected)} faces, {len(crossing_edges)} crossing edges")
    return Collar(host=c, x=x, y=y, faces=selected, crossing_edges=crossing_edges,
                  loops=[r[3] for r in records], nerve=nerve)


def dual_collar(col: Collar) -> Collar:
    """The same collar read from y to x; equals separating_collar(host, y, x) with colors swapped"""
    return Collar(host=col.host, x=col.y, y=col.x, faces=list(col.faces),
                  crossing_edges=list(col.crossing_edges), loops=list(col.loops),
                  nerve=swap_colors(col.nerve))


def realize_nerve(g: nx.MultiGraph) -> Complex:
    """
    Collar closure whose nerve is the colored graph g.

    Nerve node i becomes crossing edge i+1 (tail on the x side). An x-colored
    nerve edge u-v becomes the triangle [u+1, loop, -(v+1)], meeting at the
    tails; a y-colored one becomes [-(u+1), loop, v+1], meeting at the heads.
    Loops take the labels after the crossing edges.
    """
    nodes = sorted(g.nodes())
    index = {v: i for i, v in enumerate(nodes)}
    faces = []
    label = len(nodes)
    rows = sorted(g.edges(data=True), key=lambda e: e[2].get('index', 0))
    for u, v, d in rows:
        label += 1
        a, b = index[u] + 1, index[v] + 1
        if d.get(COLOR) == 'x':
            faces.append([a, label, -b])
        else:
            faces.append([-a, label, b])
    return Complex(faces)


def collar_from_nerve(g: nx.MultiGraph) -> Collar:
    """Collar record of the realized closure of a colored nerve"""
    host = realize_nerve(g)
    nodes = sorted(g.nodes())
    nerve = nx.MultiGraph()
    for i, _ in enumerate(nodes):
        nerve.add_node(i, label=i + 1)
    index = {v: i for i, v in enumerate(nodes)}
    rows = sorted(g.edges(data=True), key=lambda e: e[2].get('index', 0))
    for i, (u, v, d) in enumerate(rows):
        nerve.add_edge(index[u], index[v], **{COLOR: d.get(COLOR), 'index': i})
    x = host.vertex_of((1, TAIL)) if nodes else None
    y = host.vertex_of((1, HEAD)) if nodes else None
    return Collar(host=host, x=x, y=y, faces=list(range(len(rows))),
                  crossing_edges=list(range(1, len(nodes) + 1)),
                  loops=[len(nodes) + 1 + i for i in range(len(rows))], nerve=nerve)


def classify_nerve(col: Collar) -> Optional[str]:
    """Catalog nerve matching the collar's colored nerve up to color swap"""
    if col.is_empty:
        return None
    return identify_nerve(col.nerve)


def _quotient(col: Collar, contracted: str) -> Tuple[nx.MultiGraph, Dict[int, int]]:
    classes = UnionFind(col.nerve.nodes())
    for u, v, d in col.nerve.edges(data=True):
        if d[COLOR] == contracted:
            classes.union(u, v)
    groups = sorted(sorted(group) for group in classes.to_sets())
    retraction = {v: i for i, group in enumerate(groups) for v in group}
    boundary = nx.MultiGraph()
    boundary.add_nodes_from(range(len(groups)))
    for u, v, d in sorted(col.nerve.edges(data=True), key=lambda e: e[2]['index']):
        if d[COLOR] != contracted:
            boundary.add_edge(retraction[u], retraction[v], label=col.loops[d['index']])
    return boundary, retraction


def boundary_minus(col: Collar) -> nx.MultiGraph:
    """∂⁻: the nerve with x-colored edges contracted; edges are the loops at x"""
    return _quotient(col, 'x')[0]


def boundary_plus(col: Collar) -> nx.MultiGraph:
    """∂⁺: the nerve with y-colored edges contracted; edges are the loops at y"""
    return _quotient(col, 'y')[0]


def _is_spanning_tree(g: nx.MultiGraph) -> bool:
    return g.number_of_nodes() > 0 and g.number_of_edges() == g.number_of_nodes() - 1 and nx.is_connected(g)


@dataclass
class CollarPredicates:
    thick: bool
    acylindrical: bool
    boundary_injective: bool
    treeable: bool
    spans_two: bool

    def to_dict(self) -> Dict[str, Any]:
        return dict(self.__dict__)


def collar_predicates(col: Collar) -> CollarPredicates:
    nerve = col.nerve
    colors = set(col.colors)
    minus, plus = col.loops_at('x'), col.loops_at('y')
    injective = len(set(minus)) == len(minus) and len(set(plus)) == len(plus)
    return CollarPredicates(
        thick=nerve.number_of_nodes() > 0 and all(d >= 3 for _, d in nerve.degree()),
        acylindrical=not (set(minus) & set(plus)),
        boundary_injective=injective,
        treeable=all(_is_spanning_tree(color_class(nerve, c)) for c in ('x', 'y')),
        spans_two=colors == {'x', 'y'},
    )


@dataclass
class HCollarCertificate:
    """Retractions of the nerve onto ∂⁻ and ∂⁺ (nerve node -> boundary node)"""
    minus: Dict[int, int]
    plus: Dict[int, int]

    def to_dict(self) -> Dict[str, Any]:
        return {'minus': {str(k): v for k, v in self.minus.items()},
                'plus': {str(k): v for k, v in self.plus.items()}}


def h_collar_certificate(col: Collar) -> Optional[HCollarCertificate]:
    predicates = collar_predicates(col)
    if not (predicates.boundary_injective and predicates.treeable and predicates.spans_two):
        return None
    return HCollarCertificate(minus=_quotient(col, 'x')[1], plus=_quotient(col, 'y')[1])


def st_lemma_enumerate(vertex_count: int = 4, raw: bool = False) -> List[nx.MultiGraph]:
    """
    Connected loop-free cubic multigraphs on vertex_count vertices, up to isomorphism.

    Without raw, graphs below the four-vertex minimum of a thick nerve are not
    reported.
    """
    if vertex_count < 1 or (vertex_count < 4 and not raw):
        return []
    pairs = list(combinations(range(vertex_count), 2))
    found: Dict[Tuple, nx.MultiGraph] = {}
    remaining = [3] * vertex_count
    chosen: List[Tuple[int, int]] = []

    def extend(position):
        if position == len(pairs):
            if any(remaining):
                return
            g = make_multigraph(vertex_count, chosen)
            if nx.is_connected(g):
                found.setdefault(canonical_label(g), g)
            return
        i, j = pairs[position]
        top = min(remaining[i], remaining[j])
        for multiplicity in range(top, -1, -1):
            remaining[i] -= multiplicity
            remaining[j] -= multiplicity
            chosen.extend([(i, j)] * multiplicity)
            extend(position + 1)
            del chosen[len(chosen) - multiplicity:]
            remaining[i] += multiplicity
            remaining[j] += multiplicity

    extend(0)
    graphs = [found[key] for key in sorted(found)]
    logger.info(f"Cubic multigraphs on {vertex_count} vertices: {len(graphs)} "
                f"({', '.join(identify_graph(g) or 'unnamed' for g in graphs)})")
    return graphs
