"""
Model Geometries
Per-vertex decomposition, weights, the weight equation, transitivity predicates and base graphs
"""
from dataclasses import dataclass, field, asdict
from typing import Any, Dict, List, Tuple
import logging

import networkx as nx
from networkx.utils import UnionFind

from .complex import Complex
from .errors import ValidationError
from .typespec import require_triangles

logger = logging.getLogger(__name__)


def corner_classes(c: Complex, f: int) -> List[List[int]]:
    """
    Partition of the corner positions of face f.

    Corner i sits between letters i and i+1; neighbouring corners i and i+1
    are merged when letter i+1 is a loop, i.e. both corners are the same
    vertex joined through that loop.
    """
    if not 0 <= f < len(c.faces):
        raise ValidationError(f"unknown face {f} (complex has {len(c.faces)})")
    word = c.words[f]
    k = len(word)
    classes = UnionFind(range(k))
    for i in range(k):
        if c.is_loop(abs(word[(i + 1) % k])):
            classes.union(i, (i + 1) % k)
    return sorted(sorted(group) for group in classes.to_sets())


def is_crossing(c: Complex, f: int) -> bool:
    return len(corner_classes(c, f)) >= 2


@dataclass
class Segment:
    """Side of an inscribed polygon: one corner class of a crossing face at the center"""
    face: int
    corners: List[int]
    weight: int


@dataclass
class ModelGeometry:
    center: int
    loops: List[int] = field(default_factory=list)
    half_edges: List[int] = field(default_factory=list)
    boundary_edges: List[int] = field(default_factory=list)
    core_faces: List[int] = field(default_factory=list)
    corner_faces: Dict[int, List[List[int]]] = field(default_factory=dict)
    weights: Dict[int, int] = field(default_factory=dict)
    segments: List[Segment] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        data = asdict(self)
        data['corner_faces'] = {str(f): classes for f, classes in self.corner_faces.items()}
        data['weights'] = {str(e): w for e, w in self.weights.items()}
        return data


def model_geometry(c: Complex, v: int) -> ModelGeometry:
    c.check_vertex(v)
    geometry = ModelGeometry(center=v)
    for e in c.edges:
        tail, head = c.edge_vertices(e)
        if tail == v and head == v:
            geometry.loops.append(e)
        elif tail == v or head == v:
            geometry.half_edges.append(e)
    loops = set(geometry.loops)
    boundary = set()
    for f in c.faces_at(v):
        word = c.words[f]
        if all(abs(s) in loops for s in word):
            geometry.core_faces.append(f)
            continue
        classes = corner_classes(c, f)
        at_center = [group for group in classes if c.corner_vertex(f, group[0]) == v]
        geometry.corner_faces[f] = at_center
        if len(classes) >= 2:
            for group in at_center:
                geometry.segments.append(Segment(face=f, corners=group, weight=len(group)))
        for s in word:
            e = abs(s)
            if v not in c.edge_vertices(e) and e not in boundary:
                boundary.add(e)
                geometry.weights[e] = len(word) - 2
    geometry.boundary_edges = sorted(boundary)
    return geometry


@dataclass
class WeightEquation:
    crossing_faces: List[int]
    face_sum: int
    segment_sum: int
    edge_weight_sum: int
    passed: bool

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


def weight_equation_check(c: Complex) -> WeightEquation:
    """Σ over crossing faces of |r| against Σ over vertices of segment weights"""
    crossing = [f for f in range(len(c.faces)) if is_crossing(c, f)]
    face_sum = sum(len(c.words[f]) for f in crossing)
    segment_sum = 0
    edge_weight_sum = 0
    for v in range(c.vertex_count):
        geometry = model_geometry(c, v)
        segment_sum += sum(s.weight for s in geometry.segments)
        edge_weight_sum += sum(geometry.weights.values())
    return WeightEquation(
        crossing_faces=crossing,
        face_sum=face_sum,
        segment_sum=segment_sum,
        edge_weight_sum=edge_weight_sum,
        passed=face_sum == segment_sum,
    )


@dataclass
class Presentation:
    """Raw group presentation; generators are edge labels, relators signed words"""
    generators: List[int] = field(default_factory=list)
    relators: List[List[int]] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


def model_group(c: Complex, v: int) -> Presentation:
    """Loops at v and the words of the core faces"""
    geometry = model_geometry(c, v)
    return Presentation(
        generators=list(geometry.loops),
        relators=[list(c.words[f]) for f in geometry.core_faces],
    )


def one_skeleton(c: Complex) -> nx.MultiGraph:
    graph = nx.MultiGraph()
    graph.add_nodes_from(range(c.vertex_count))
    for e in c.edges:
        tail, head = c.edge_vertices(e)
        graph.add_edge(tail, head, key=e)
    return graph


def fundamental_group(c: Complex) -> Presentation:
    """Edges outside a BFS spanning tree, and face words with tree edges deleted"""
    if c.vertex_count == 0:
        return Presentation()
    skeleton = one_skeleton(c)
    if not nx.is_connected(skeleton):
        raise ValidationError("fundamental group requires a connected complex")
    tree = {min(skeleton[u][w]) for u, w in nx.bfs_edges(skeleton, 0)}
    generators = [e for e in c.edges if e not in tree]
    relators = [[s for s in word if abs(s) not in tree] for word in c.words]
    return Presentation(generators=generators, relators=relators)


@dataclass
class TransitivityVerdict:
    passed: bool
    failing_faces: List[int] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


def is_two_thirds_transitive(c: Complex) -> TransitivityVerdict:
    """Every triangle meets at most two vertices"""
    require_triangles(c)
    failing = [f for f in range(len(c.faces)) if len(set(c.corner_vertices(f))) > 2]
    return TransitivityVerdict(passed=not failing, failing_faces=failing)


def is_mildly_transitive(c: Complex) -> TransitivityVerdict:
    """Every crossing face has exactly two corner classes"""
    failing = [f for f in range(len(c.faces)) if len(corner_classes(c, f)) > 2]
    return TransitivityVerdict(passed=not failing, failing_faces=failing)


def adjacent_pairs(c: Complex) -> List[Tuple[int, int]]:
    pairs = set()
    for e in c.edges:
        tail, head = c.edge_vertices(e)
        if tail != head:
            pairs.add((min(tail, head), max(tail, head)))
    return sorted(pairs)


def base_graph(c: Complex) -> nx.MultiGraph:
    """One vertex per vertex of c, one edge per pair of distinct adjacent vertices"""
    graph = nx.MultiGraph()
    graph.add_nodes_from(range(c.vertex_count))
    graph.add_edges_from(adjacent_pairs(c))
    return graph
