"""
Rank 7/4 Cobordism Classifier
Exhaustive search for the one-vertex group cobordisms whose two collars are connected of type S or T

The search runs over pairs of roots (embedded paths of length 3) of the
Möbius–Kantor graph L, pairings of the remaining link vertices into loops,
and the core triangles those loops close up. Every intermediate claim is
recorded as a checkpoint.
"""
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations, product
from typing import Any, Dict, Iterator, List, Optional, Tuple
import logging

import networkx as nx

from .catalog import identify_nerve, moebius_kantor
from .cobordism import (
    Cobordism, CollarSide, LEFT, RIGHT, duality_involutions, isomorphic_cobordisms, rho,
    role_isomorphisms, reference_closure,
)
from .collars import classify_nerve, separating_collar
from .complex import Complex, HEAD, TAIL, canonical_word
from .errors import SearchError
from .graphs import automorphisms, make_multigraph, same_graph
from .isomorphism import compose_maps
from .typespec import interior_vertices

logger = logging.getLogger(__name__)

Root = Tuple[int, int, int, int]

SEGMENT5 = 'segment5'
ROOT_PLUS_EDGE = 'root_plus_edge'

# complement shape -> rank label of the orbit
RANKS = {ROOT_PLUS_EDGE: '3/2', SEGMENT5: '2'}

# Edge labels of an assembled cobordism
LOOP_LABELS = (1, 2, 3, 4)
ALPHA_LABEL = 5
BETA_LABEL = 9
LEFT_BOUNDARY = (13, 14, 15)
RIGHT_BOUNDARY = (16, 17, 18)

EXPECTED_FACES = 14
EXPECTED_EDGES = 18
EXPECTED_VERTICES = 3


# =============================================================================
# ROOTS
# =============================================================================

def normalize_root(path) -> Root:
    path = tuple(path)
    return min(path, tuple(reversed(path)))


def is_root(L: nx.MultiGraph, path) -> bool:
    """Four distinct vertices, consecutive ones adjacent"""
    path = tuple(path)
    if len(path) != 4 or len(set(path)) != 4 or not all(v in L for v in path):
        return False
    return all(L.has_edge(path[i], path[i + 1]) for i in range(3))


def _neighbors(L: nx.MultiGraph, v) -> List[int]:
    return sorted(set(L.neighbors(v)))


def enumerate_roots(L: nx.MultiGraph) -> List[Root]:
    roots = set()
    for a in L.nodes():
        for b in _neighbors(L, a):
            for c in _neighbors(L, b):
                if c == a:
                    continue
                for d in _neighbors(L, c):
                    if d in (a, b):
                        continue
                    roots.add(normalize_root((a, b, c, d)))
    return sorted(roots)


def non_backtracking_walks(L: nx.MultiGraph, length: int = 3) -> int:
    """Count of non-backtracking walks with the given number of steps"""
    walks = [(v, None) for v in L.nodes()]
    for _ in range(length):
        walks = [(w, v) for v, previous in walks for w in _neighbors(L, v) if w != previous]
    return len(walks)


@dataclass
class RootOrbit:
    representative: Root
    members: List[Root]
    shape: str
    rank: str

    def to_dict(self) -> Dict[str, Any]:
        return {'representative': list(self.representative), 'size': len(self.members),
                'shape': self.shape, 'rank': self.rank}


def distances_from(L: nx.MultiGraph, sources) -> Dict[int, int]:
    return dict(nx.multi_source_dijkstra_path_length(L, set(sources)))


def complement_vertices(L: nx.MultiGraph, alpha: Root) -> List[int]:
    """Vertices at distance at least 2 from alpha"""
    distance = distances_from(L, alpha)
    return sorted(v for v in L.nodes() if distance.get(v, 2) >= 2)


@dataclass
class ComplementShape:
    vertices: List[int]
    edges: int
    components: List[int]
    shape: str

    def to_dict(self) -> Dict[str, Any]:
        return dict(self.__dict__)


def root_complement_shape(L: nx.MultiGraph, alpha: Root) -> ComplementShape:
    vertices = complement_vertices(L, alpha)
    sub = nx.Graph(L.subgraph(vertices))
    sizes = sorted(len(comp) for comp in nx.connected_components(sub))
    is_forest = nx.is_forest(sub) if sub.number_of_nodes() else False
    paths = is_forest and all(d <= 2 for _, d in sub.degree())
    shape = 'other'
    if paths and sizes == [6]:
        shape = SEGMENT5
    elif paths and sizes == [2, 4]:
        shape = ROOT_PLUS_EDGE
    return ComplementShape(vertices=vertices, edges=sub.number_of_edges(), components=sizes, shape=shape)


def root_orbits(L: nx.MultiGraph) -> List[RootOrbit]:
    """Aut(L)-orbits of roots, in order of their least member"""
    roots = enumerate_roots(L)
    nodes = sorted(L.nodes())
    group = automorphisms(L)
    images = [{nodes[i]: nodes[g[i]] for i in range(len(nodes))} for g in group.elements]
    orbit_of: Dict[Root, int] = {}
    orbits = []
    for root in roots:
        if root in orbit_of:
            continue
        members = sorted({normalize_root(tuple(g[v] for v in root)) for g in images})
        for member in members:
            orbit_of[member] = len(orbits)
        shape = root_complement_shape(L, root).shape
        orbits.append(RootOrbit(representative=root, members=members, shape=shape,
                                rank=RANKS.get(shape, '?')))
    logger.info(f"{len(roots)} roots in {len(orbits)} orbits of sizes {[len(o.members) for o in orbits]}")
    return orbits


# =============================================================================
# PARTNERS
# =============================================================================

def raw_partner_roots(L: nx.MultiGraph, alpha: Root) -> List[Root]:
    inside = set(complement_vertices(L, alpha))
    return [r for r in enumerate_roots(L) if all(v in inside for v in r)]


def loop_profiles(L: nx.MultiGraph, alpha: Root, beta: Root) -> Dict[int, Tuple[int, int]]:
    """For every loop end: (neighbours in alpha, neighbours in beta)"""
    used = set(alpha) | set(beta)
    profiles = {}
    for v in sorted(L.nodes()):
        if v in used:
            continue
        around = _neighbors(L, v)
        profiles[v] = (sum(1 for w in around if w in alpha), sum(1 for w in around if w in beta))
    return profiles


def loops_possible(L: nx.MultiGraph, alpha: Root, beta: Root) -> bool:
    """Loop ends pair up with equal profiles only if every profile occurs an even number of times"""
    counts = Counter(loop_profiles(L, alpha, beta).values())
    return all(n % 2 == 0 for n in counts.values())


def partner_roots(L: nx.MultiGraph, alpha: Root) -> List[Root]:
    return [beta for beta in raw_partner_roots(L, alpha) if loops_possible(L, alpha, beta)]


def forced_loop_edges(L: nx.MultiGraph, alpha: Root, beta: Root) -> List[Tuple[int, int]]:
    """Edges of L with both ends at distance at least 2 from alpha and from beta"""
    da, db = distances_from(L, alpha), distances_from(L, beta)
    far = {v for v in L.nodes() if da[v] >= 2 and db[v] >= 2}
    return sorted((min(u, v), max(u, v)) for u, v in L.edges() if u in far and v in far)


# =============================================================================
# CONFIGURATIONS
# =============================================================================

@dataclass
class Configuration:
    """
    Loops are (tail end, head end) pairs. x_pairs / y_pairs are
    (alpha or beta neighbour at the tail, neighbour at the head, loop index):
    the collar faces at the alpha and beta sides. core lists the core face
    words over loop labels 1..4.
    """
    alpha: Root
    beta: Root
    loops: List[Tuple[int, int]]
    x_pairs: List[Tuple[int, int, int]]
    y_pairs: List[Tuple[int, int, int]]
    core: List[Tuple[int, ...]]
    collar_types: Tuple[str, str]

    def to_dict(self) -> Dict[str, Any]:
        return {
            'alpha': list(self.alpha), 'beta': list(self.beta),
            'loops': [list(p) for p in self.loops],
            'core': [list(w) for w in self.core],
            'collar_types': list(self.collar_types),
        }


def _matchings(ends: List[int], same) -> Iterator[List[Tuple[int, int]]]:
    if not ends:
        yield []
        return
    first, rest = ends[0], ends[1:]
    for i, other in enumerate(rest):
        if not same(first, other):
            continue
        for tail in _matchings(rest[:i] + rest[i + 1:], same):
            yield [(first, other)] + tail


def _span_type(root: Root, pairs: List[Tuple[int, int, int]]) -> Optional[str]:
    """Nerve of one side: the root path in one color, the loop-side pairs in the other"""
    index = {v: i for i, v in enumerate(root)}
    edges = [(0, 1), (1, 2), (2, 3)] + [(index[a], index[b]) for a, b, _ in pairs]
    colors = ['y'] * 3 + ['x'] * len(pairs)
    return identify_nerve(make_multigraph(4, edges, colors))


def _loop_letter(loops: List[Tuple[int, int]], li: int, start: int) -> int:
    label = LOOP_LABELS[li]
    return label if loops[li][0] == start else -label


def _core_cycles(sigma: Dict[Tuple[int, int], Tuple[int, int, int]]) -> Optional[List[List[Tuple[int, int, int]]]]:
    """Follow loop then link edge until the walk closes; every cycle must be a triangle"""
    seen = set()
    cycles = []
    for key in sigma:
        if key in seen:
            continue
        current = key
        cycle = []
        for _ in range(len(sigma) + 1):
            seen.add(current)
            b, _ = current
            b2, c, li = sigma[current]
            cycle.append((li, b, b2))
            current = (c, b2)
            if current == key:
                break
        if current != key or len(cycle) != 3:
            return None
        cycles.append(cycle)
    return cycles


def enumerate_configurations(L: nx.MultiGraph, alpha: Root, beta: Root) -> List[Configuration]:
    profiles = loop_profiles(L, alpha, beta)
    ends = sorted(profiles)

    def kind(w):
        return 'C' if w in alpha else 'D' if w in beta else 'K'

    found = []
    for loops in _matchings(ends, lambda a, b: profiles[a] == profiles[b]):
        per_loop = []
        for p, q in loops:
            options = []
            for t in ('C', 'D', 'K'):
                at_p = [w for w in _neighbors(L, p) if kind(w) == t]
                at_q = [w for w in _neighbors(L, q) if kind(w) == t]
                options.append([[(t, w, pq[i]) for i, w in enumerate(at_p)] for pq in permutations(at_q)])
            per_loop.append([sum(choice, []) for choice in product(*options)])
        for choice in product(*per_loop):
            x_pairs, y_pairs = [], []
            sigma = {}
            for li, pairs in enumerate(choice):
                p, q = loops[li]
                for t, wp, wq in pairs:
                    if t == 'C':
                        x_pairs.append((wp, wq, li))
                    elif t == 'D':
                        y_pairs.append((wp, wq, li))
                    else:
                        sigma[(p, wp)] = (q, wq, li)
                        sigma[(q, wq)] = (p, wp, li)
            tx, ty = _span_type(alpha, x_pairs), _span_type(beta, y_pairs)
            if tx not in ('S', 'T') or ty not in ('S', 'T'):
                continue
            cycles = _core_cycles(sigma)
            if cycles is None:
                continue
            core = {}
            for cycle in cycles:
                word = canonical_word([_loop_letter(loops, li, b) for li, b, _ in cycle])
                core[word] = word
            found.append(Configuration(alpha=alpha, beta=beta, loops=list(loops), x_pairs=x_pairs,
                                       y_pairs=y_pairs, core=list(core), collar_types=(tx, ty)))
    logger.debug(f"alpha {alpha}, beta {beta}: {len(found)} configurations")
    return found


# =============================================================================
# ASSEMBLY
# =============================================================================

def assemble_cobordism(conf: Configuration, L: Optional[nx.MultiGraph] = None) -> Cobordism:
    """Collar faces on both sides plus the core faces; validated before it is returned"""
    L = moebius_kantor() if L is None else L
    c = {v: ALPHA_LABEL + i for i, v in enumerate(conf.alpha)}
    d = {v: BETA_LABEL + i for i, v in enumerate(conf.beta)}
    loops = conf.loops
    left, right, core = [], [], []
    for i in range(3):
        left.append([c[conf.alpha[i]], -c[conf.alpha[i + 1]], LEFT_BOUNDARY[i]])
    for wp, wq, li in conf.x_pairs:
        left.append([c[wp], _loop_letter(loops, li, loops[li][0]), -c[wq]])
    for i in range(3):
        right.append([-d[conf.beta[i]], d[conf.beta[i + 1]], RIGHT_BOUNDARY[i]])
    for wp, wq, li in conf.y_pairs:
        right.append([-d[wp], _loop_letter(loops, li, loops[li][0]), d[wq]])
    core = [list(w) for w in conf.core]
    body = Complex(left + right + core)
    cobordism = Cobordism(
        body=body,
        left=CollarSide(faces=list(range(len(left))), boundary=list(LEFT_BOUNDARY),
                        outer=(ALPHA_LABEL, TAIL), inner=(ALPHA_LABEL, HEAD)),
        right=CollarSide(faces=list(range(len(left), len(left) + len(right))),
                         boundary=list(RIGHT_BOUNDARY),
                         outer=(BETA_LABEL, HEAD), inner=(BETA_LABEL, TAIL)),
        marks=[(ALPHA_LABEL, HEAD)],
    )
    _validate_block(cobordism, L)
    return cobordism


def _validate_block(x: Cobordism, L: nx.MultiGraph):
    body = x.body
    counts = (len(body.faces), len(body.edges), body.vertex_count)
    if counts != (EXPECTED_FACES, EXPECTED_EDGES, EXPECTED_VERTICES):
        raise SearchError(f"assembled cobordism has (faces, edges, vertices) = {counts}")
    interior = interior_vertices(body)
    if len(interior) != 1:
        raise SearchError(f"assembled cobordism has {len(interior)} interior vertices")
    if not same_graph(body.link(interior[0]), L):
        raise SearchError("interior link of the assembled cobordism is not the Möbius–Kantor graph")
    x.validate()
    for name in (LEFT, RIGHT):
        side = x.side(name)
        col = separating_collar(body, body.vertex_of(side.inner), body.vertex_of(side.outer))
        kind = classify_nerve(col)
        if kind not in ('S', 'T'):
            raise SearchError(f"{name} collar of the assembled cobordism has nerve {kind}")


def collar_types(x: Cobordism) -> Tuple[str, str]:
    kinds = []
    for name in (LEFT, RIGHT):
        side = x.side(name)
        col = separating_collar(x.body, x.body.vertex_of(side.inner), x.body.vertex_of(side.outer))
        kinds.append(classify_nerve(col))
    return tuple(kinds)


def attach_charts(x: Cobordism) -> Cobordism:
    """
    Charts from K for a self-dual block.

    L0 is the least closure isomorphism K -> left with K⁻ at the inner
    vertex, δ the least duality involution; the left chart is L0 ∘ ρ and the
    right chart δ ∘ L0.
    """
    k, minus, plus = reference_closure()
    candidates = role_isomorphisms(k, [(minus, x.left.inner), (plus, x.left.outer)], x.closure(LEFT))
    if not candidates:
        raise SearchError("left collar closure is not isomorphic to the reference collar closure")
    involutions = duality_involutions(x)
    if not involutions:
        raise SearchError("block is not self-dual")
    l0 = candidates[0].mapping
    delta = involutions[0].mapping
    x.left.chart = compose_maps(l0, rho())
    x.right.chart = compose_maps(delta, l0)
    x.validate()
    return x


# =============================================================================
# PIPELINE
# =============================================================================

@dataclass
class Checkpoint:
    name: str
    expected: Any
    observed: Any
    passed: bool

    def to_dict(self) -> Dict[str, Any]:
        return {'name': self.name, 'expected': self.expected, 'observed': self.observed, 'passed': self.passed}


@dataclass
class CobordismClass:
    rank: str
    representative: Cobordism
    configurations: int
    self_dual: bool
    collar_types: Tuple[str, str]
    duality_involutions: int
    link_permutation_fixed_points: int

    def to_dict(self) -> Dict[str, Any]:
        return {
            'rank': self.rank,
            'configurations': self.configurations,
            'self_dual': self.self_dual,
            'collar_types': list(self.collar_types),
            'duality_involutions': self.duality_involutions,
            'link_permutation_fixed_points': self.link_permutation_fixed_points,
            'cobordism': self.representative.to_dict(),
        }


@dataclass
class StReport:
    checkpoints: List[Checkpoint] = field(default_factory=list)
    orbits: List[RootOrbit] = field(default_factory=list)
    classes: List[CobordismClass] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checkpoints)

    def check(self, name: str, expected: Any, observed: Any):
        passed = expected == observed
        self.checkpoints.append(Checkpoint(name, expected, observed, passed))
        level = logging.INFO if passed else logging.WARNING
        logger.log(level, f"checkpoint {name}: expected {expected}, observed {observed}")

    def to_dict(self) -> Dict[str, Any]:
        return {
            'passed': self.passed,
            'checkpoints': [c.to_dict() for c in self.checkpoints],
            'orbits': [o.to_dict() for o in self.orbits],
            'classes': [c.to_dict() for c in self.classes],
        }


def link_permutation(x: Cobordism, involution) -> List[int]:
    """Permutation of the interior link vertices induced by an automorphism"""
    body = x.body
    v = interior_vertices(body)[0]
    ends = [data['end'] for _, data in sorted(body.link(v).nodes(data=True))]
    index = {end: i for i, end in enumerate(ends)}
    return [index[involution.end_image(end)] for end in ends]


def classify_st(L: Optional[nx.MultiGraph] = None) -> StReport:
    L = moebius_kantor() if L is None else L
    report = StReport()

    roots = enumerate_roots(L)
    report.check('roots', non_backtracking_walks(L) // 2, len(roots))
    orbits = root_orbits(L)
    report.orbits = orbits
    report.check('root_orbits', 2, len(orbits))
    report.check('complement_shapes', sorted([ROOT_PLUS_EDGE, SEGMENT5]), sorted(o.shape for o in orbits))

    raw = {o.rank: len(raw_partner_roots(L, o.representative)) for o in orbits}
    report.check('raw_partners', {'3/2': 1, '2': 3}, raw)
    partners = {o.rank: partner_roots(L, o.representative) for o in orbits}
    report.check('partners', {'3/2': 1, '2': 1}, {rank: len(found) for rank, found in partners.items()})

    assembled: List[Tuple[str, Cobordism]] = []
    per_case = {}
    forced_ok = True
    for orbit in orbits:
        alpha = orbit.representative
        configs = []
        for beta in partners[orbit.rank]:
            found = enumerate_configurations(L, alpha, beta)
            configs.extend(found)
            if orbit.shape == ROOT_PLUS_EDGE:
                forced = forced_loop_edges(L, alpha, beta)
                forced_ok = forced_ok and len(forced) == 1 and all(
                    any(set(pair) == set(forced[0]) for pair in conf.loops) for conf in found)
        per_case[orbit.rank] = configs
        for conf in configs:
            assembled.append((orbit.rank, assemble_cobordism(conf, L)))
    report.check('forced_loop', True, forced_ok)

    classes: List[List[Any]] = []
    for rank, block in assembled:
        for entry in classes:
            if isomorphic_cobordisms(entry[1], block) is not None:
                entry[2] += 1
                break
        else:
            classes.append([rank, block, 1])
    class_ranks = Counter(rank for rank, _, _ in classes)
    report.check('configurations', {'3/2': 1, '2': 1},
                 {o.rank: class_ranks.get(o.rank, 0) for o in orbits})
    report.check('counting', [EXPECTED_FACES, EXPECTED_EDGES, EXPECTED_VERTICES] * len(classes),
                 [n for _, block, _ in classes
                  for n in (len(block.body.faces), len(block.body.edges), block.body.vertex_count)])

    for rank, block, count in classes:
        involutions = duality_involutions(block)
        permutation = link_permutation(block, involutions[0]) if involutions else []
        report.classes.append(CobordismClass(
            rank=rank,
            representative=block,
            configurations=count,
            self_dual=bool(involutions),
            collar_types=collar_types(block),
            duality_involutions=len(involutions),
            link_permutation_fixed_points=sum(1 for i, j in enumerate(permutation) if i == j),
        ))
    report.check('classes', 2, len(report.classes))
    report.check('collar_types', [['S', 'S']] * len(report.classes),
                 [list(c.collar_types) for c in report.classes])
    report.check('self_dual', [True] * len(report.classes), [c.self_dual for c in report.classes])
    if report.classes:
        first = report.classes[0]
        report.check('duality_permutation', {'involutions': 1, 'fixed_points': 0},
                     {'involutions': first.duality_involutions,
                      'fixed_points': first.link_permutation_fixed_points})
    logger.info(f"classify-st: {len(report.classes)} classes, "
                f"{sum(c.passed for c in report.checkpoints)}/{len(report.checkpoints)} checkpoints passed")
    return report


@lru_cache(maxsize=None)
def _blocks() -> Tuple[Cobordism, Cobordism]:
    report = classify_st()
    if not report.passed or len(report.classes) != 2:
        raise SearchError("classifier did not reproduce the two rank 7/4 cobordisms")
    by_rank = {c.rank: c.representative for c in report.classes}
    return attach_charts(by_rank['3/2']), attach_charts(by_rank['2'])


def st_blocks() -> Dict[str, Cobordism]:
    """The two cobordisms with charts, keyed by block symbol ('3/2', '2')"""
    first, second = _blocks()
    return {'3/2': first, '2': second}
