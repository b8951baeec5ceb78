"""
Face-Word Complexes
Signed edges, face words, and the vertices, links and counts derived from them
"""
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Iterable, List, Sequence, Tuple
import logging

import networkx as nx
from networkx.utils import UnionFind

from .errors import ValidationError

logger = logging.getLogger(__name__)

TAIL = 0
HEAD = 1

# (edge label, TAIL | HEAD)
End = Tuple[int, int]


def letter_key(letter: int) -> Tuple[int, int]:
    """Order on signed letters: by label, + before -"""
    return (abs(letter), 0 if letter > 0 else 1)


def start_end(letter: int) -> End:
    return (abs(letter), TAIL if letter > 0 else HEAD)


def finish_end(letter: int) -> End:
    return (abs(letter), HEAD if letter > 0 else TAIL)


def image_end(end: End, image: int) -> End:
    """Where an end of an edge goes when the edge is sent to the signed letter `image`"""
    label, side = end
    if image > 0:
        return (image, side)
    return (-image, 1 - side)


def apply_letter(mapping: Dict[int, int], letter: int) -> int:
    image = mapping[abs(letter)]
    return image if letter > 0 else -image


def read_word(letters: Sequence[int], start: int, direction: int) -> Tuple[int, ...]:
    """Read a cyclic word from `start`, forwards (+1) or backwards with inverted letters (-1)"""
    k = len(letters)
    if direction > 0:
        return tuple(letters[(start + t) % k] for t in range(k))
    return tuple(-letters[(start - t) % k] for t in range(k))


def canonical_word(letters: Sequence[int]) -> Tuple[int, ...]:
    """Least representative among rotations and sign-flipped reversals"""
    best = None
    best_key = None
    for direction in (1, -1):
        for start in range(len(letters)):
            candidate = read_word(letters, start, direction)
            key = [letter_key(s) for s in candidate]
            if best_key is None or key < best_key:
                best, best_key = candidate, key
    return best


@dataclass(frozen=True)
class SignedEdge:
    """An edge label with a traversal direction"""
    label: int
    sign: int = 1

    def __post_init__(self):
        if self.label < 1:
            raise ValidationError(f"edge label must be positive, got {self.label}")
        if self.sign not in (1, -1):
            raise ValidationError(f"edge sign must be +1 or -1, got {self.sign}")

    @classmethod
    def from_int(cls, value: int) -> "SignedEdge":
        if value == 0:
            raise ValidationError("0 is not a signed edge")
        return cls(abs(value), 1 if value > 0 else -1)

    def to_int(self) -> int:
        return self.label * self.sign

    def inverse(self) -> "SignedEdge":
        return SignedEdge(self.label, -self.sign)

    def __str__(self):
        return str(self.to_int())


@dataclass(frozen=True)
class FaceWord:
    """A face attached along a cyclic word; always stored in canonical cyclic form"""
    letters: Tuple[int, ...]

    def __post_init__(self):
        letters = tuple(int(s) for s in self.letters)
        if not letters:
            raise ValidationError("face word is empty")
        if any(s == 0 for s in letters):
            raise ValidationError("face word contains 0")
        object.__setattr__(self, 'letters', canonical_word(letters))

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        return "[" + ",".join(str(s) for s in self.letters) + "]"


class Complex:
    """A 2-complex given by its face words; vertices are derived from corners"""

    def __init__(self, faces: Iterable[Iterable[int]] = ()):
        words = []
        for index, face in enumerate(faces):
            letters = face.letters if isinstance(face, FaceWord) else tuple(face)
            try:
                words.append(FaceWord(tuple(letters)))
            except ValidationError as e:
                raise ValidationError(f"face {index}: {e}") from e
        self.faces: Tuple[FaceWord, ...] = tuple(words)

    # -- basic counts -------------------------------------------------------

    @cached_property
    def words(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(f.letters for f in self.faces)

    @cached_property
    def occurrence_count(self) -> Dict[int, int]:
        counts = Counter(abs(s) for word in self.words for s in word)
        return dict(sorted(counts.items()))

    @cached_property
    def edges(self) -> Tuple[int, ...]:
        return tuple(self.occurrence_count)

    @cached_property
    def boundary_edges(self) -> Tuple[int, ...]:
        return tuple(e for e, n in self.occurrence_count.items() if n == 1)

    @property
    def max_label(self) -> int:
        return self.edges[-1] if self.edges else 0

    @cached_property
    def ends(self) -> Tuple[End, ...]:
        return tuple((e, side) for e in self.edges for side in (TAIL, HEAD))

    # -- vertices -----------------------------------------------------------

    @cached_property
    def _vertex_classes(self) -> Tuple[Tuple[End, ...], ...]:
        corners = UnionFind(self.ends)
        for word in self.words:
            k = len(word)
            for i in range(k):
                corners.union(finish_end(word[i]), start_end(word[(i + 1) % k]))
        classes = [tuple(sorted(group)) for group in corners.to_sets()]
        classes.sort(key=lambda group: group[0])
        return tuple(classes)

    @cached_property
    def _vertex_index(self) -> Dict[End, int]:
        return {end: v for v, group in enumerate(self._vertex_classes) for end in group}

    def vertices(self) -> List[Tuple[End, ...]]:
        """Vertex classes ordered by their least (label, end) member"""
        return list(self._vertex_classes)

    @property
    def vertex_count(self) -> int:
        return len(self._vertex_classes)

    def vertex_of(self, end: End) -> int:
        try:
            return self._vertex_index[end]
        except KeyError:
            raise ValidationError(f"end {end} is not an end of an edge of this complex") from None

    def check_vertex(self, v: int) -> int:
        if not 0 <= v < self.vertex_count:
            raise ValidationError(f"unknown vertex {v} (complex has {self.vertex_count})")
        return v

    def corner_vertex(self, face: int, position: int) -> int:
        """Vertex at the corner between letters `position` and `position + 1`"""
        return self._vertex_index[finish_end(self.words[face][position])]

    def corner_vertices(self, face: int) -> Tuple[int, ...]:
        return tuple(self.corner_vertex(face, i) for i in range(len(self.words[face])))

    def faces_at(self, v: int) -> List[int]:
        return [f for f in range(len(self.faces)) if v in self.corner_vertices(f)]

    def edge_vertices(self, label: int) -> Tuple[int, int]:
        """(tail vertex, head vertex) of an edge"""
        return (self._vertex_index[(label, TAIL)], self._vertex_index[(label, HEAD)])

    def is_loop(self, label: int) -> bool:
        tail, head = self.edge_vertices(label)
        return tail == head

    # -- links --------------------------------------------------------------

    def link(self, v: int) -> nx.MultiGraph:
        """Link at v: one node per end in the class, one edge per corner"""
        self.check_vertex(v)
        ends = self._vertex_classes[v]
        index = {end: i for i, end in enumerate(ends)}
        graph = nx.MultiGraph()
        for i, end in enumerate(ends):
            graph.add_node(i, end=end)
        for f, word in enumerate(self.words):
            k = len(word)
            for i in range(k):
                left = finish_end(word[i])
                if left not in index:
                    continue
                right = start_end(word[(i + 1) % k])
                graph.add_edge(index[left], index[right], corner=(f, i))
        return graph

    def euler_characteristic(self) -> int:
        return self.vertex_count - len(self.edges) + len(self.faces)

    # -- derived complexes --------------------------------------------------

    def relabel(self, mapping: Dict[int, int]) -> "Complex":
        """Apply a map label -> signed label to every face"""
        return Complex([apply_letter(mapping, s) for s in word] for word in self.words)

    def sub(self, indices: Iterable[int]) -> "Complex":
        return Complex(self.words[i] for i in indices)

    def __add__(self, other: "Complex") -> "Complex":
        return Complex(self.words + other.words)

    def __len__(self):
        return len(self.faces)

    def __eq__(self, other):
        return isinstance(other, Complex) and self.words == other.words

    def __hash__(self):
        return hash(self.words)

    def __repr__(self):
        return f"Complex({[list(w) for w in self.words]})"


def disjoint_union(a: Complex, b: Complex) -> Complex:
    """a followed by b with b's labels shifted past a's"""
    offset = a.max_label
    return a + b.relabel({e: e + offset for e in b.edges})


@dataclass(frozen=True)
class PointedComplex:
    """A complex with a chosen base vertex"""
    complex: Complex
    basepoint: int

    def __post_init__(self):
        self.complex.check_vertex(self.basepoint)
