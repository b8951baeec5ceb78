"""
Complex Isomorphism and Canonical Forms
Face-by-face backtracking over signed edge maps, and a traversal-based canonical labeling
"""
from collections import Counter, defaultdict
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Sequence, Tuple
import logging

import networkx as nx

from .complex import (
    Complex, End, PointedComplex, apply_letter, image_end, letter_key, read_word, start_end,
    finish_end,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Isomorphism:
    """Signed edge map a -> b together with the induced face bijection"""
    edge_map: Tuple[Tuple[int, int], ...]
    face_map: Tuple[int, ...]

    @property
    def mapping(self) -> Dict[int, int]:
        return dict(self.edge_map)

    def image(self, letter: int) -> int:
        return apply_letter(self.mapping, letter)

    def end_image(self, end: End) -> End:
        return image_end(end, self.mapping[end[0]])

    def sort_key(self) -> List[Tuple[int, int]]:
        return [letter_key(image) for _, image in self.edge_map]

    def is_involution(self) -> bool:
        mapping = self.mapping
        return all(apply_letter(mapping, image) == label for label, image in self.edge_map)

    def vertex_map(self, a: Complex, b: Complex) -> Dict[int, int]:
        return {v: b.vertex_of(self.end_image(group[0])) for v, group in enumerate(a.vertices())}

    def to_dict(self):
        return {'edges': {str(k): v for k, v in self.edge_map}, 'faces': list(self.face_map)}


def invert(mapping: Dict[int, int]) -> Dict[int, int]:
    """Inverse of a signed bijection of labels"""
    return {abs(image): (label if image > 0 else -label) for label, image in mapping.items()}


def compose_maps(outer: Dict[int, int], inner: Dict[int, int]) -> Dict[int, int]:
    """outer after inner"""
    return {label: apply_letter(outer, image) for label, image in inner.items()}


def _invariants(c: Complex, tags: Optional[Sequence]) -> Tuple:
    tag_list = list(tags) if tags is not None else [None] * len(c.faces)
    return (
        len(c.faces),
        len(c.edges),
        c.vertex_count,
        sorted(Counter((len(w), str(t)) for w, t in zip(c.words, tag_list)).items()),
        sorted(Counter(c.occurrence_count.values()).items()),
    )


def iter_isomorphisms(a: Complex, b: Complex,
                      tags: Optional[Tuple[Sequence, Sequence]] = None) -> Iterator[Isomorphism]:
    """
    Enumerate every isomorphism a -> b.

    Faces are mapped one at a time; after the first face of a component, the
    next face is always one that already contains a mapped edge, so each step
    only tries the occurrences of a known image edge. Optional face tags
    (tags_a, tags_b) restrict faces to faces with equal tag.
    """
    tags_a, tags_b = tags if tags is not None else (None, None)
    if _invariants(a, tags_a) != _invariants(b, tags_b):
        return
    fa, fb = a.words, b.words
    occurrences = defaultdict(list)
    for j, word in enumerate(fb):
        for pos, s in enumerate(word):
            occurrences[abs(s)].append((j, pos))

    edge_map: Dict[int, int] = {}
    used_images: Dict[int, int] = {}
    face_map = [-1] * len(fa)
    used_faces = [False] * len(fb)
    seen = set()

    def same_tag(i, j):
        return tags_a is None or tags_a[i] == tags_b[j]

    def next_face():
        for i, word in enumerate(fa):
            if face_map[i] >= 0:
                continue
            for pos, s in enumerate(word):
                if abs(s) in edge_map:
                    return i, pos
        for i in range(len(fa)):
            if face_map[i] < 0:
                return i, None
        return None

    def assign(i, word):
        added = []
        for s, w in zip(fa[i], word):
            label = abs(s)
            target = w if s > 0 else -w
            if label in edge_map:
                if edge_map[label] != target:
                    break
            elif abs(target) in used_images:
                break
            else:
                edge_map[label] = target
                used_images[abs(target)] = label
                added.append(label)
        else:
            return added
        undo(added)
        return None

    def undo(added):
        for label in added:
            del used_images[abs(edge_map[label])]
            del edge_map[label]

    def candidates(i, pos):
        word = fa[i]
        k = len(word)
        if pos is None:
            for j, other in enumerate(fb):
                if not used_faces[j] and len(other) == k and same_tag(i, j):
                    for start in range(k):
                        for direction in (1, -1):
                            yield j, start, direction
            return
        want = apply_letter(edge_map, word[pos])
        for j, bpos in occurrences[abs(want)]:
            if used_faces[j] or len(fb[j]) != k or not same_tag(i, j):
                continue
            if fb[j][bpos] == want:
                yield j, (bpos - pos) % k, 1
            else:
                yield j, (bpos + pos) % k, -1

    def search():
        step = next_face()
        if step is None:
            found = tuple(sorted(edge_map.items()))
            if found not in seen:
                seen.add(found)
                yield Isomorphism(found, tuple(face_map))
            return
        i, pos = step
        for j, start, direction in list(candidates(i, pos)):
            added = assign(i, read_word(fb[j], start, direction))
            if added is None:
                continue
            face_map[i] = j
            used_faces[j] = True
            yield from search()
            face_map[i] = -1
            used_faces[j] = False
            undo(added)

    yield from search()


def isomorphic(a: Complex, b: Complex,
               pointed: Optional[Tuple[int, int]] = None) -> Optional[Isomorphism]:
    """First isomorphism a -> b (matching basepoints when given), or None"""
    for iso in iter_isomorphisms(a, b):
        if pointed is not None:
            va, vb = pointed
            if b.vertex_of(iso.end_image(a.vertices()[va][0])) != vb:
                continue
        return iso
    return None


def complex_automorphisms(c: Complex, tags: Optional[Sequence] = None) -> List[Isomorphism]:
    return list(iter_isomorphisms(c, c, (tags, tags) if tags is not None else None))


# =============================================================================
# CANONICAL FORM
# =============================================================================

def _face_components(c: Complex) -> List[List[int]]:
    """Faces grouped by shared edges, ordered by least face index"""
    graph = nx.Graph()
    graph.add_nodes_from(range(len(c.faces)))
    first_face = {}
    for i, word in enumerate(c.words):
        for s in word:
            graph.add_edge(i, first_face.setdefault(abs(s), i))
    components = [sorted(comp) for comp in nx.connected_components(graph)]
    components.sort()
    return components


class _Traversal:
    """
    Least encoding of one edge-connected component over all starting flags.

    A traversal reads a start face, then repeatedly picks the smallest new
    label that still occurs in an unvisited face and reads every such
    occurrence so that the label reads positively; ties branch. New labels
    are handed out in order of first appearance and letters are encoded as
    2n (positive) or 2n+1 (negative).
    """

    def __init__(self, words, component, tags):
        self.words = words
        self.total = len(component)
        self.tags = tags
        self.occurrences = defaultdict(list)
        for i in component:
            for pos, s in enumerate(words[i]):
                self.occurrences[abs(s)].append((i, pos))
        self.best_key = None
        self.best_relabel = None

    def encode(self, face, start, direction, relabel, order):
        word = read_word(self.words[face], start, direction)
        relabel = dict(relabel)
        order = list(order)
        out = [self.tags[face] if self.tags is not None else 0]
        for s in word:
            label = abs(s)
            if label not in relabel:
                order.append(label)
                relabel[label] = (len(order), 1 if s > 0 else -1)
            n, orientation = relabel[label]
            out.append(2 * n if orientation * s > 0 else 2 * n + 1)
        return tuple(out), relabel, order

    def run(self, flags):
        firsts = [(self.encode(face, start, direction, {}, []), face)
                  for face, start, direction in flags]
        if not firsts:
            return
        least = min(encoded[0] for encoded, _ in firsts)
        for (code, relabel, order), face in firsts:
            if code == least:
                self._extend([code], {face}, relabel, order, 0)

    def _extend(self, sequence, visited, relabel, order, cursor):
        if self.best_key is not None and sequence > self.best_key[:len(sequence)]:
            return
        if len(visited) == self.total:
            if self.best_key is None or sequence < self.best_key:
                self.best_key = list(sequence)
                self.best_relabel = relabel
            return
        while True:
            label = order[cursor]
            hits = [(f, pos) for f, pos in self.occurrences[label] if f not in visited]
            if hits:
                break
            cursor += 1
        _, orientation = relabel[label]
        options = []
        for face, pos in hits:
            s = self.words[face][pos]
            direction = orientation * (1 if s > 0 else -1)
            options.append((self.encode(face, pos, direction, relabel, order), face))
        least = min(encoded[0] for encoded, _ in options)
        for (code, new_relabel, new_order), face in options:
            if code == least:
                self._extend(sequence + [code], visited | {face}, new_relabel, new_order, cursor)


def _start_flags(c: Complex, component, basepoint):
    flags = []
    for face in component:
        word = c.words[face]
        for pos, s in enumerate(word):
            for direction in (1, -1):
                if basepoint is not None:
                    end = start_end(s) if direction > 0 else finish_end(s)
                    if c.vertex_of(end) != basepoint:
                        continue
                flags.append((face, pos, direction))
    return flags


def _canonical_components(c: Complex, basepoint: Optional[int], tags: Optional[Sequence]):
    tag_codes = None
    if tags is not None:
        names = sorted(set(str(t) for t in tags))
        tag_codes = [names.index(str(t)) for t in tags]
    results = []
    for component in _face_components(c):
        pointed = None
        if basepoint is not None and any(basepoint in c.corner_vertices(f) for f in component):
            pointed = basepoint
        traversal = _Traversal(c.words, component, tag_codes)
        traversal.run(_start_flags(c, component, pointed))
        key = (0 if pointed is not None else 1, tuple(traversal.best_key))
        results.append((key, traversal.best_relabel, component))
    results.sort(key=lambda item: item[0])
    return results


def canonical_key(c: Complex, basepoint: Optional[int] = None,
                  tags: Optional[Sequence] = None) -> Tuple:
    """Hashable key equal for two complexes iff they are (pointed, tag-preserving) isomorphic"""
    if basepoint is not None:
        c.check_vertex(basepoint)
    return tuple(key for key, _, _ in _canonical_components(c, basepoint, tags))


def _canonical_words(c: Complex, basepoint, tags):
    words = []
    offset = 0
    for _, relabel, component in _canonical_components(c, basepoint, tags):
        mapping = {label: orientation * (n + offset) for label, (n, orientation) in relabel.items()}
        words.extend(tuple(apply_letter(mapping, s) for s in c.words[f]) for f in component)
        offset += len(relabel)
    return words


def canonical_form(c: Complex) -> Complex:
    """Relabel edges 1..n and order faces so isomorphic complexes coincide"""
    relabeled = Complex(_canonical_words(c, None, None))
    ordered = sorted(relabeled.words, key=lambda w: [letter_key(s) for s in w])
    return Complex(ordered)


def canonical_pointed(pc: PointedComplex) -> PointedComplex:
    """Canonical form of a pointed complex; the basepoint becomes the tail of edge 1"""
    relabeled = Complex(_canonical_words(pc.complex, pc.basepoint, None))
    ordered = Complex(sorted(relabeled.words, key=lambda w: [letter_key(s) for s in w]))
    return PointedComplex(ordered, ordered.vertex_of((1, 0)))
