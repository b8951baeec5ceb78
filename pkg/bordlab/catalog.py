"""
Named Graph Catalog
Möbius–Kantor, Heawood, the fake Möbius–Kantor graph and the colored collar nerves
"""
from typing import Dict, List, Optional, Sequence, Tuple
import logging

import networkx as nx

from .errors import ValidationError
from .graphs import canonical_label, colored_iso, make_multigraph

logger = logging.getLogger(__name__)

# Nerve vertices are listed A, B, C, ... in the drawings; here A = 0, B = 1, ...
A, B, C, D, E, F, G, H = range(8)

# (vertex count, x-colored edges, y-colored edges)
NERVES: Dict[str, Tuple[int, List[Tuple[int, int]], List[Tuple[int, int]]]] = {
    # 4-cycle with two opposite edges doubled
    'S': (4, [(0, 1), (1, 2), (2, 3)], [(1, 0), (0, 3), (3, 2)]),
    # tetrahedron
    'T': (4, [(0, 1), (1, 2), (2, 3)], [(2, 0), (0, 3), (3, 1)]),
    'cubic': (8,
              # 000 = 0, 001 = 1, ..., 111 = 7
              [(0, 1), (1, 3), (0, 2), (2, 6), (0, 4), (4, 5)],
              [(7, 3), (3, 2), (7, 6), (6, 4), (7, 5), (5, 1)]),
    'theta': (8,
              [(A, B), (A, C), (A, D), (B, E), (C, F), (D, G)],
              [(H, E), (H, F), (H, G), (B, E), (C, F), (D, G)]),
    'theta_prime': (8,
                    [(A, B), (A, C), (A, D), (B, F), (C, E), (D, G)],
                    [(H, E), (H, F), (H, G), (B, E), (C, F), (D, G)]),
    # 8-cycle v1..v8 = 0..7 with alternating edges doubled
    'octagonal': (8,
                  [(0, 1), (1, 2), (3, 4), (4, 5), (5, 6), (7, 0)],
                  [(1, 2), (2, 3), (3, 4), (5, 6), (6, 7), (7, 0)]),
}

NERVE_ORDER = ('S', 'T', 'cubic', 'theta', 'theta_prime', 'octagonal')

GRAPH_NAMES = (
    'moebius_kantor', 'heawood', 'fake_moebius_kantor',
    'nerve_S', 'nerve_T', 'nerve_theta', 'nerve_theta_prime', 'nerve_cube', 'nerve_octagonal',
)

_NERVE_KEYS = {
    'nerve_S': 'S', 'nerve_T': 'T', 'nerve_theta': 'theta',
    'nerve_theta_prime': 'theta_prime', 'nerve_cube': 'cubic', 'nerve_octagonal': 'octagonal',
}


def generalized_petersen(n: int, k: int) -> nx.MultiGraph:
    """GP(n, k): outer cycle i-(i+1), spokes i-(n+i), inner star polygon (n+i)-(n+(i+k)%n)"""
    edges = []
    for i in range(n):
        edges.append((i, (i + 1) % n))
        edges.append((i, n + i))
        edges.append((n + i, n + (i + k) % n))
    return make_multigraph(2 * n, edges)


def moebius_kantor() -> nx.MultiGraph:
    return generalized_petersen(8, 3)


def fano_lines() -> List[Tuple[int, int, int]]:
    """Lines {i, i+1, i+3} mod 7 of the Fano plane on points 0..6"""
    return [tuple(sorted((i, (i + 1) % 7, (i + 3) % 7))) for i in range(7)]


def heawood() -> nx.MultiGraph:
    """Point-line incidence graph of the Fano plane; points 0..6, lines 7..13"""
    edges = [(p, 7 + i) for i, line in enumerate(fano_lines()) for p in line]
    return make_multigraph(14, edges)


def fake_moebius_kantor() -> nx.MultiGraph:
    """Link of the flipped complex X″ at its first vertex (girth 5)"""
    from .corpus import load_complex
    link = load_complex('xpp').link(0)
    return nx.convert_node_labels_to_integers(link, ordering='sorted')


def nerve(name: str) -> nx.MultiGraph:
    """Colored nerve from the catalog ('S', 'T', 'cubic', 'theta', 'theta_prime', 'octagonal')"""
    if name not in NERVES:
        raise ValidationError(f"unknown nerve {name!r}")
    n, x_edges, y_edges = NERVES[name]
    return make_multigraph(n, x_edges + y_edges, ['x'] * len(x_edges) + ['y'] * len(y_edges))


def tripod_union(bijection: Sequence[int]) -> nx.MultiGraph:
    """
    Two height-2 tripods on 8 vertices.

    The x tripod is A-B-E, A-C-F, A-D-G. The y tripod is centered at H with
    middles E, F, G; its leg through middle E + i ends at leaf B + bijection[i].
    """
    x_edges = [(A, B), (A, C), (A, D), (B, E), (C, F), (D, G)]
    y_edges = [(H, E), (H, F), (H, G)]
    y_edges += [(E + i, B + j) for i, j in enumerate(bijection)]
    return make_multigraph(8, x_edges + y_edges, ['x'] * 6 + ['y'] * 6)


def named_graph(name: str) -> nx.MultiGraph:
    """Catalog lookup"""
    if name == 'moebius_kantor':
        return moebius_kantor()
    if name == 'heawood':
        return heawood()
    if name == 'fake_moebius_kantor':
        return fake_moebius_kantor()
    if name in _NERVE_KEYS:
        return nerve(_NERVE_KEYS[name])
    raise ValidationError(f"unknown graph {name!r}; known: {', '.join(GRAPH_NAMES)}")


_plain_labels: Dict[str, Tuple] = {}


def identify_graph(g: nx.MultiGraph) -> Optional[str]:
    """Catalog name whose uncolored canonical form equals g's, if any"""
    if not _plain_labels:
        for name in GRAPH_NAMES:
            _plain_labels[name] = canonical_label(named_graph(name))
    label = canonical_label(g)
    for name in GRAPH_NAMES:
        if _plain_labels[name] == label:
            return name
    return None


def identify_nerve(g: nx.MultiGraph) -> Optional[str]:
    """Catalog nerve colored-isomorphic to g, allowing the global x <-> y swap"""
    for name in NERVE_ORDER:
        if colored_iso(g, nerve(name), allow_color_swap=True) is not None:
            return name
    return None
