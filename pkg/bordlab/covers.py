"""
Double Covers
Z/2 cocycles, the covers they define, covering-map verification and free involutions
"""
from collections import Counter
from dataclasses import dataclass, field
from itertools import product
from typing import Any, Dict, List, Optional, Tuple
import logging

import numpy as np

from .complex import Complex, End, apply_letter, canonical_word, finish_end, image_end, start_end
from .errors import ValidationError
from .isomorphism import Isomorphism, canonical_key, iter_isomorphisms

logger = logging.getLogger(__name__)


# =============================================================================
# GF(2) LINEAR ALGEBRA
# =============================================================================

def gf2_row_reduce(matrix: np.ndarray) -> Tuple[np.ndarray, List[int]]:
    """Reduced row echelon form over GF(2) and its pivot columns"""
    m = (np.asarray(matrix, dtype=np.int64) % 2).astype(np.uint8)
    rows, cols = m.shape
    pivots = []
    r = 0
    for col in range(cols):
        if r == rows:
            break
        hits = np.nonzero(m[r:, col])[0]
        if hits.size == 0:
            continue
        p = r + hits[0]
        if p != r:
            m[[r, p]] = m[[p, r]]
        for i in range(rows):
            if i != r and m[i, col]:
                m[i] ^= m[r]
        pivots.append(col)
        r += 1
    return m[:r], pivots


def gf2_rank(matrix: np.ndarray) -> int:
    if matrix.size == 0:
        return 0
    return len(gf2_row_reduce(matrix)[1])


def gf2_nullspace(matrix: np.ndarray, cols: int) -> List[np.ndarray]:
    """Basis of {z : matrix @ z = 0 mod 2}"""
    if matrix.size == 0:
        return [np.eye(cols, dtype=np.uint8)[i] for i in range(cols)]
    reduced, pivots = gf2_row_reduce(matrix)
    free = [j for j in range(cols) if j not in pivots]
    basis = []
    for j in free:
        z = np.zeros(cols, dtype=np.uint8)
        z[j] = 1
        for row, p in enumerate(pivots):
            z[p] = reduced[row, j]
        basis.append(z)
    return basis


# =============================================================================
# COCYCLES
# =============================================================================

@dataclass
class Cocycle2:
    """Edge values in {0, 1} summing to 0 mod 2 along every face word"""
    values: Dict[int, int] = field(default_factory=dict)

    def __call__(self, label: int) -> int:
        return self.values.get(label, 0)

    def support(self) -> List[int]:
        return sorted(e for e, value in self.values.items() if value)

    def is_cocycle(self, c: Complex) -> bool:
        return all(sum(self(abs(s)) for s in word) % 2 == 0 for word in c.words)

    def to_dict(self) -> Dict[str, Any]:
        return {'support': self.support()}


def face_incidence_mod2(c: Complex) -> np.ndarray:
    edge_index = {e: i for i, e in enumerate(c.edges)}
    matrix = np.zeros((len(c.faces), len(c.edges)), dtype=np.int64)
    for f, word in enumerate(c.words):
        for s in word:
            matrix[f, edge_index[abs(s)]] += 1
    return matrix % 2


def coboundary_mod2(c: Complex) -> np.ndarray:
    """edges x vertices; a vertex function g has coboundary g(tail) + g(head)"""
    matrix = np.zeros((len(c.edges), c.vertex_count), dtype=np.int64)
    for i, e in enumerate(c.edges):
        tail, head = c.edge_vertices(e)
        matrix[i, tail] += 1
        matrix[i, head] += 1
    return matrix % 2


def cohomology_basis(c: Complex) -> List[Cocycle2]:
    """Cocycles whose classes form a basis of H¹(c; Z/2)"""
    cocycles = gf2_nullspace(face_incidence_mod2(c), len(c.edges))
    coboundaries = coboundary_mod2(c).T
    span = [row for row in coboundaries if row.any()]
    rank = gf2_rank(np.array(span)) if span else 0
    basis = []
    for z in cocycles:
        candidate = span + [z]
        new_rank = gf2_rank(np.array(candidate))
        if new_rank > rank:
            span, rank = candidate, new_rank
            basis.append(Cocycle2({e: int(z[i]) for i, e in enumerate(c.edges) if z[i]}))
    return basis


def cohomology_dimension(c: Complex) -> int:
    """dim H¹(c; Z/2) = |E| - rank(faces) - rank(coboundary)"""
    return (len(c.edges) - gf2_rank(face_incidence_mod2(c))
            - gf2_rank(coboundary_mod2(c)))


# =============================================================================
# COVERS
# =============================================================================

def sheet_offset(c: Complex) -> int:
    """Second-sheet labels are e + 10^digits(max label), so 1 lifts to 1 and 11 over a base with labels < 10"""
    return 10 ** len(str(c.max_label)) if c.edges else 1


def cover_from_cocycle(c: Complex, z: Cocycle2) -> Complex:
    """
    Double cover defined by z.

    Edge e lifts to e (sheet 0) and e + offset (sheet 1), each running from
    sheet s at the tail to sheet s + z(e) at the head. Faces are listed with
    all sheet-0 lifts first.
    """
    if not z.is_cocycle(c):
        raise ValidationError("edge values do not sum to 0 along every face")
    offset = sheet_offset(c)

    def lift(e, sheet):
        return e + offset if sheet else e

    sheets = ([], [])
    for word in c.words:
        for start in (0, 1):
            sheet = start
            letters = []
            for s in word:
                e = abs(s)
                if s > 0:
                    letters.append(lift(e, sheet))
                else:
                    letters.append(-lift(e, sheet ^ z(e)))
                sheet ^= z(e)
            sheets[start].append(letters)
    return Complex(sheets[0] + sheets[1])


def projection(c: Complex) -> Dict[int, int]:
    """Covering map on edge labels for covers built by cover_from_cocycle"""
    offset = sheet_offset(c)
    return {**{e: e for e in c.edges}, **{e + offset: e for e in c.edges}}


def sheet_swap(c: Complex) -> Dict[int, int]:
    """Deck transformation of cover_from_cocycle(c, z) exchanging the sheets"""
    offset = sheet_offset(c)
    return {**{e: e + offset for e in c.edges}, **{e + offset: e for e in c.edges}}


@dataclass
class DoubleCover:
    cocycle: Cocycle2
    cover: Complex
    edge_map: Dict[int, int]

    def to_dict(self) -> Dict[str, Any]:
        return {
            'cocycle': self.cocycle.to_dict(),
            'faces': [list(w) for w in self.cover.words],
            'edge_map': {str(k): v for k, v in self.edge_map.items()},
        }


def cocycle_classes(c: Complex) -> List[Cocycle2]:
    """One representative per nonzero class of H¹(c; Z/2): 2^d - 1 of them"""
    basis = cohomology_basis(c)
    classes = []
    for coefficients in product((0, 1), repeat=len(basis)):
        if not any(coefficients):
            continue
        values = {}
        for bit, z in zip(coefficients, basis):
            if bit:
                for e in z.support():
                    values[e] = values.get(e, 0) ^ 1
        classes.append(Cocycle2({e: 1 for e, value in sorted(values.items()) if value}))
    return classes


def enumerate_double_covers(c: Complex) -> List[DoubleCover]:
    """One cover per nonzero class of H¹(c; Z/2), deduplicated up to isomorphism"""
    classes = cocycle_classes(c)
    covers = []
    seen = set()
    for cocycle in classes:
        cover = cover_from_cocycle(c, cocycle)
        key = canonical_key(cover)
        if key in seen:
            continue
        seen.add(key)
        covers.append(DoubleCover(cocycle=cocycle, cover=cover, edge_map=projection(c)))
    logger.info(f"{len(classes)} nonzero cocycle classes, {len(covers)} distinct double covers")
    return covers


@dataclass
class CoverVerdict:
    passed: bool
    problems: List[str] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        return {'passed': self.passed, 'problems': list(self.problems)}


def _end_image(edge_map: Dict[int, int], end: End) -> End:
    return image_end(end, edge_map[end[0]])


def _corner_pairs(c: Complex, v: int, mapping=None) -> Counter:
    """Link edges at v as unordered end pairs, optionally pushed through an edge map"""
    pairs = Counter()
    for word in c.words:
        k = len(word)
        for i in range(k):
            a, b = finish_end(word[i]), start_end(word[(i + 1) % k])
            if c.vertex_of(a) != v:
                continue
            if mapping is not None:
                a, b = _end_image(mapping, a), _end_image(mapping, b)
            pairs[tuple(sorted((a, b)))] += 1
    return pairs


def verify_cover(cover: Complex, base: Complex, edge_map: Dict[int, int]) -> CoverVerdict:
    """Check that edge_map (cover label -> base signed label) is a 2-sheeted covering map"""
    missing = [e for e in cover.edges if e not in edge_map]
    if missing:
        raise ValidationError(f"edge map is not total: no image for {missing[:5]}")
    problems = []
    base_edges = set(base.edges)
    edge_counts = Counter(abs(edge_map[e]) for e in cover.edges)
    for e in base.edges:
        if edge_counts[e] != 2:
            problems.append(f"edge {e} has {edge_counts[e]} preimages")
    stray = sorted(set(edge_counts) - base_edges)
    if stray:
        problems.append(f"edges {stray} are not edges of the base")
        return CoverVerdict(passed=False, problems=problems)

    face_images = Counter(canonical_word([apply_letter(edge_map, s) for s in word]) for word in cover.words)
    base_faces = Counter(base.words)
    for word, count in sorted(face_images.items()):
        if word not in base_faces:
            problems.append(f"cover face maps to {list(word)}, which is not a base face")
    for word, count in base_faces.items():
        if face_images.get(word, 0) != 2 * count:
            problems.append(f"base face {list(word)} has {face_images.get(word, 0)} preimages")

    vertex_map = {}
    for v, ends in enumerate(cover.vertices()):
        images = {base.vertex_of(_end_image(edge_map, end)) for end in ends}
        if len(images) != 1:
            problems.append(f"cover vertex {v} maps to several base vertices {sorted(images)}")
            continue
        vertex_map[v] = images.pop()
    vertex_counts = Counter(vertex_map.values())
    for w in range(base.vertex_count):
        if vertex_counts[w] != 2:
            problems.append(f"base vertex {w} has {vertex_counts[w]} preimages")

    for v, w in sorted(vertex_map.items()):
        if _corner_pairs(cover, v, edge_map) != _corner_pairs(base, w):
            problems.append(f"link at cover vertex {v} does not map onto the link at base vertex {w}")
    return CoverVerdict(passed=not problems, problems=problems)


# =============================================================================
# FREE INVOLUTIONS
# =============================================================================

def face_permutation(c: Complex, mapping: Dict[int, int]) -> List[int]:
    """
    Face indices under an involutive edge map.

    Faces with equal words are told apart by index: within a class that the
    map sends to itself, consecutive indices are paired and an odd one out is
    fixed; between two classes the k-th face goes to the k-th face.
    """
    by_word: Dict[Tuple[int, ...], List[int]] = {}
    for f, word in enumerate(c.words):
        by_word.setdefault(word, []).append(f)
    image = [-1] * len(c.faces)
    for word, members in by_word.items():
        target = canonical_word([apply_letter(mapping, s) for s in word])
        partners = by_word.get(target)
        if partners is None or len(partners) != len(members):
            raise ValidationError("edge map does not carry the faces onto faces")
        if target == word:
            for a, b in zip(members[0::2], members[1::2]):
                image[a], image[b] = b, a
            if len(members) % 2:
                image[members[-1]] = members[-1]
        else:
            for a, b in zip(members, partners):
                image[a] = b
    return image


def is_free_involution(c: Complex, mapping: Dict[int, int]) -> bool:
    """An automorphism of order 2 fixing no vertex, edge or face"""
    if set(mapping) != set(c.edges) or sorted(abs(i) for i in mapping.values()) != list(c.edges):
        return False
    if Counter(c.relabel(mapping).words) != Counter(c.words):
        return False
    if any(apply_letter(mapping, image) != e for e, image in mapping.items()):
        return False
    if any(abs(image) == e for e, image in mapping.items()):
        return False
    if any(i == j for i, j in enumerate(face_permutation(c, mapping))):
        return False
    for v, ends in enumerate(c.vertices()):
        if c.vertex_of(image_end(ends[0], mapping[ends[0][0]])) == v:
            return False
    return True


def find_free_involution(c: Complex) -> Optional[Isomorphism]:
    for iso in iter_isomorphisms(c, c):
        if is_free_involution(c, iso.mapping):
            return iso
    return None
