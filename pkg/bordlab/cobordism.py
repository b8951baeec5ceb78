"""
Group Cobordisms
Complexes with two collar sides, gluing along collar closures, duality, edge flips and splits

A side's chart is an edge map from the reference collar closure K (the
separating collar closure of X′, K⁻ = its x vertex, K⁺ = its y vertex) into
the body. Right charts send K⁻ to the inner vertex, left charts send K⁻ to
the outer vertex, so the gluing of x.right onto y.left is L_y ∘ R_x⁻¹.
"""
from collections import Counter
from dataclasses import dataclass, field, replace
from functools import lru_cache
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple
import logging

from .collars import Collar, separating_collar
from .complex import (
    Complex, End, HEAD, SignedEdge, TAIL, apply_letter, canonical_word, image_end,
)
from .config import config
from .corpus import load_complex
from .errors import CompositionError, ValidationError
from .graphs import same_graph
from .isomorphism import (
    Isomorphism, compose_maps, invert, iter_isomorphisms,
)
from .parsers import CobordismDocument
from .typespec import interior_vertices

logger = logging.getLogger(__name__)

LEFT = 'left'
RIGHT = 'right'


# =============================================================================
# REFERENCE COLLAR CLOSURE
# =============================================================================

@lru_cache(maxsize=None)
def reference_closure() -> Tuple[Complex, End, End]:
    """K with representative ends of K⁻ and K⁺"""
    host = load_complex('xprime')
    x, y = host.vertex_of((1, TAIL)), host.vertex_of((1, HEAD))
    closure = separating_collar(host, x, y).closure()
    return closure, (1, TAIL), (1, HEAD)


def role_isomorphisms(a: Complex, a_pairs: Sequence[Tuple[End, End]],
                       b: Complex) -> List[Isomorphism]:
    """Isomorphisms a -> b sending the vertex of each first end to the vertex of the paired end"""
    wanted = [(a.vertex_of(src), b.vertex_of(dst)) for src, dst in a_pairs]
    found = []
    for iso in iter_isomorphisms(a, b):
        vertex_map = iso.vertex_map(a, b)
        if all(vertex_map[u] == v for u, v in wanted):
            found.append(iso)
    found.sort(key=lambda iso: iso.sort_key())
    return found


@lru_cache(maxsize=None)
def role_swap() -> Tuple[Tuple[int, int], ...]:
    """ρ: the least involutive automorphism of K exchanging K⁻ and K⁺"""
    k, minus, plus = reference_closure()
    for iso in role_isomorphisms(k, [(minus, plus), (plus, minus)], k):
        if iso.is_involution():
            return iso.edge_map
    raise CompositionError("reference collar closure has no role-swapping involution")


def rho() -> Dict[int, int]:
    return dict(role_swap())


# =============================================================================
# COBORDISMS
# =============================================================================

@dataclass
class CollarSide:
    """
    One boundary collar of a cobordism.

    faces index the body; boundary lists the side's boundary edges (∂⁻ on the
    left, ∂⁺ on the right); outer is an end at the vertex carrying those
    edges and inner an end at the other span vertex.
    """
    faces: List[int]
    boundary: List[int]
    outer: End
    inner: End
    chart: Optional[Dict[int, int]] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            'faces': list(self.faces),
            'boundary': list(self.boundary),
            'outer': list(self.outer),
            'inner': list(self.inner),
            'chart': None if self.chart is None else {str(k): v for k, v in sorted(self.chart.items())},
        }


@dataclass
class Cobordism:
    """A body complex with an optional left side C̄ and right side D̄; marks are ends"""
    body: Complex
    left: Optional[CollarSide] = None
    right: Optional[CollarSide] = None
    marks: List[End] = field(default_factory=list)

    def side(self, name: str) -> Optional[CollarSide]:
        if name == LEFT:
            return self.left
        if name == RIGHT:
            return self.right
        raise ValidationError(f"unknown side {name!r}")

    def closure(self, name: str) -> Complex:
        side = self.side(name)
        if side is None:
            raise CompositionError(f"cobordism has no {name} collar")
        return self.body.sub(side.faces)

    @property
    def tags(self) -> List[str]:
        """Per face: 'L', 'R', 'LR' (identity cobordisms) or 'K' for interior faces"""
        left = set(self.left.faces) if self.left else set()
        right = set(self.right.faces) if self.right else set()
        tags = []
        for f in range(len(self.body.faces)):
            tag = ('L' if f in left else '') + ('R' if f in right else '')
            tags.append(tag or 'K')
        return tags

    def mark_vertices(self) -> List[int]:
        return [self.body.vertex_of(end) for end in self.marks]

    def validate(self):
        """Boundary edges split between the sides; each side edge stays inside its side"""
        sides = [(name, s) for name, s in ((LEFT, self.left), (RIGHT, self.right)) if s is not None]
        n = len(self.body.faces)
        for name, s in sides:
            bad = [f for f in s.faces if not 0 <= f < n]
            if bad:
                raise ValidationError(f"{name} side lists faces {bad} outside 0..{n - 1}")
            for end in (s.outer, s.inner):
                self.body.vertex_of(end)
        if self.left and self.right:
            shared = set(self.left.faces) & set(self.right.faces)
            if shared and not (set(self.left.faces) == set(self.right.faces) == set(range(n))):
                raise ValidationError(f"left and right sides share faces {sorted(shared)}")
            overlap = set(self.left.boundary) & set(self.right.boundary)
            if overlap:
                raise ValidationError(f"left and right boundaries share edges {sorted(overlap)}")
        declared = set()
        for name, s in sides:
            declared.update(s.boundary)
            inside = set(s.faces)
            for f, word in enumerate(self.body.words):
                if f in inside:
                    continue
                stray = sorted({abs(x) for x in word} & set(s.boundary))
                if stray:
                    raise ValidationError(f"{name} boundary edges {stray} occur in face {f} outside the side")
        undeclared = sorted(set(self.body.boundary_edges) - declared)
        if undeclared:
            raise ValidationError(f"boundary edges {undeclared} belong to neither side")
        for name, s in sides:
            if s.chart is not None:
                check_chart(self, name)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'faces': [list(w) for w in self.body.words],
            'left': None if self.left is None else self.left.to_dict(),
            'right': None if self.right is None else self.right.to_dict(),
            'marks': [list(end) for end in self.marks],
            'vertices': self.body.vertex_count,
            'edges': len(self.body.edges),
        }


def check_chart(x: Cobordism, name: str):
    side = x.side(name)
    k, minus, plus = reference_closure()
    target = x.closure(name)
    chart = side.chart
    if set(chart) != set(k.edges):
        raise ValidationError(f"{name} chart must map exactly the edges {list(k.edges)}")
    if Counter(k.relabel(chart).words) != Counter(target.words):
        raise ValidationError(f"{name} chart is not an isomorphism onto the {name} collar closure")
    to_outer, to_inner = (minus, plus) if name == LEFT else (plus, minus)
    for end, role in ((to_outer, side.outer), (to_inner, side.inner)):
        if x.body.vertex_of(image_end(end, chart[end[0]])) != x.body.vertex_of(role):
            raise ValidationError(f"{name} chart does not respect the inner and outer vertices")


def _side_roles(body: Complex, faces: List[int], boundary: List[int], name: str) -> Tuple[End, End]:
    if not boundary:
        raise ValidationError(f"{name} side has no boundary edges to locate its outer vertex")
    outer = (boundary[0], TAIL)
    v_outer = body.vertex_of(outer)
    for f in faces:
        for letter in body.words[f]:
            end = (abs(letter), TAIL)
            if body.vertex_of(end) != v_outer:
                return outer, end
            end = (abs(letter), HEAD)
            if body.vertex_of(end) != v_outer:
                return outer, end
    raise ValidationError(f"{name} side faces meet a single vertex")


def from_document(doc: CobordismDocument) -> Cobordism:
    body = doc.faces

    def side(faces, boundary, chart, name):
        if faces is None:
            return None
        bad = [f for f in faces if not 0 <= f < len(body.faces)]
        if bad:
            raise ValidationError(f"{name} side lists faces {bad} outside 0..{len(body.faces) - 1}")
        outer, inner = _side_roles(body, faces, sorted(boundary), name)
        return CollarSide(faces=list(faces), boundary=sorted(boundary), outer=outer, inner=inner, chart=chart)

    x = Cobordism(
        body=body,
        left=side(doc.left_faces, doc.left_boundary, doc.left_chart, LEFT),
        right=side(doc.right_faces, doc.right_boundary, doc.right_chart, RIGHT),
        marks=[(label, HEAD if side_code else TAIL) for label, side_code in doc.marks],
    )
    x.validate()
    return x


# =============================================================================
# RELABELING
# =============================================================================

def _map_side(side: Optional[CollarSide], mapping: Dict[int, int],
              faces: Optional[Dict[int, int]] = None) -> Optional[CollarSide]:
    """Push a side through a label map (and optionally a face re-indexing)"""
    if side is None:
        return None
    return CollarSide(
        faces=[faces[f] for f in side.faces] if faces is not None else list(side.faces),
        boundary=sorted(abs(mapping[e]) for e in side.boundary),
        outer=image_end(side.outer, mapping[side.outer[0]]),
        inner=image_end(side.inner, mapping[side.inner[0]]),
        chart=None if side.chart is None else {k: apply_letter(mapping, v) for k, v in side.chart.items()},
    )


def relabel_cobordism(x: Cobordism, mapping: Dict[int, int]) -> Cobordism:
    return Cobordism(
        body=x.body.relabel(mapping),
        left=_map_side(x.left, mapping),
        right=_map_side(x.right, mapping),
        marks=[image_end(end, mapping[end[0]]) for end in x.marks],
    )


def shift(x: Cobordism, offset: int) -> Cobordism:
    return relabel_cobordism(x, {e: e + offset for e in x.body.edges})


def compact(x: Cobordism, keep: int = 0) -> Cobordism:
    """Labels up to keep stay; larger labels are renumbered consecutively after keep"""
    mapping = {}
    following = keep
    for e in x.body.edges:
        if e <= keep:
            mapping[e] = e
        else:
            following += 1
            mapping[e] = following
    return relabel_cobordism(x, mapping)


# =============================================================================
# GLUING
# =============================================================================

def closure_isomorphisms(x: Cobordism, y: Cobordism) -> List[Isomorphism]:
    """Isomorphisms x.right closure -> y.left closure, inner to outer and outer to inner, least first"""
    if x.right is None or y.left is None:
        raise CompositionError("composition needs a right collar on the first and a left collar on the second")
    # closures keep the body labels, so side ends are valid in them
    return role_isomorphisms(x.closure(RIGHT), [(x.right.inner, y.left.outer), (x.right.outer, y.left.inner)],
                              y.closure(LEFT))


def chart_matching(x: Cobordism, y: Cobordism) -> Dict[int, int]:
    """L_y ∘ R_x⁻¹"""
    if x.right is None or y.left is None:
        raise CompositionError("composition needs a right collar on the first and a left collar on the second")
    if x.right.chart is None or y.left.chart is None:
        raise CompositionError("both glued sides need charts")
    return compose_maps(y.left.chart, invert(x.right.chart))


def _charted(x: Cobordism, y: Cobordism) -> bool:
    return (x.right is not None and y.left is not None
            and x.right.chart is not None and y.left.chart is not None)


def _check_matching(a: Complex, b: Complex, matching: Dict[int, int], roles) -> None:
    if set(matching) != set(a.edges) or sorted(abs(v) for v in matching.values()) != list(b.edges):
        raise CompositionError("matching is not a bijection between the collar closure edges")
    if Counter(a.relabel(matching).words) != Counter(b.words):
        raise CompositionError("matching does not carry the collar closure faces onto each other")
    for src, dst in roles:
        if b.vertex_of(image_end(src, matching[src[0]])) != b.vertex_of(dst):
            raise CompositionError("matching does not send inner to outer and outer to inner")


def _pick_matching(x: Cobordism, y: Cobordism, matching: Optional[Dict[int, int]],
                   require_unique: Optional[bool]) -> Dict[int, int]:
    if require_unique is None:
        require_unique = config.get('search', 'require_unique_gluing', default=False)
    if matching is not None:
        _check_matching(x.closure(RIGHT), y.closure(LEFT), matching,
                        [(x.right.inner, y.left.outer), (x.right.outer, y.left.inner)])
        return matching
    isos = closure_isomorphisms(x, y)
    if not isos:
        raise CompositionError("collar closures are not isomorphic with matching roles")
    if require_unique and len(isos) > 1:
        raise CompositionError(f"gluing is ambiguous: {len(isos)} closure isomorphisms")
    logger.debug(f"Gluing: {len(isos)} closure isomorphisms, using the least")
    return isos[0].mapping


def _interior_links(c: Complex):
    return [c.link(v) for v in interior_vertices(c)]


def check_type_preserved(inputs: Iterable[Complex], result: Complex):
    """Every interior link of result is isomorphic to an interior link of an input"""
    inputs = list(inputs)
    if any(len(w) != 3 for c in inputs + [result] for w in c.words):
        return
    references = [link for c in inputs for link in _interior_links(c)]
    if not references:
        return
    for v in interior_vertices(result):
        link = result.link(v)
        if not any(same_graph(link, ref) for ref in references):
            raise CompositionError(f"gluing does not preserve the type: link at vertex {v} is new")


def compose(x: Cobordism, y: Cobordism, matching: Optional[Dict[int, int]] = None,
            require_unique: Optional[bool] = None, verify: bool = True) -> Cobordism:
    """
    y ∘ x: glue x.right to y.left.

    matching maps x.right closure labels to y.left closure labels (y's own
    labels). Without it the chart matching L_y ∘ R_x⁻¹ is used when both glued
    sides carry charts, and the least role-respecting isomorphism otherwise.
    x keeps its labels, the surviving labels of y follow after x's largest.
    """
    if matching is None and _charted(x, y):
        matching = chart_matching(x, y)
    offset = x.body.max_label
    shifted = shift(y, offset)
    if matching is not None:
        matching = {k: (v + offset if v > 0 else v - offset) for k, v in matching.items()}
    phi = _pick_matching(x, shifted, matching, require_unique)
    back = invert(phi)

    def pull(letter):
        return apply_letter(back, letter) if abs(letter) in back else letter

    pull_map = {e: pull(e) for e in shifted.body.edges}
    right_words = {f: canonical_word(x.body.words[f]) for f in x.right.faces}
    faces = [list(w) for w in x.body.words]
    index: Dict[int, int] = {}
    left_of_y = set(shifted.left.faces)
    for f, word in enumerate(shifted.body.words):
        if f in left_of_y:
            image = canonical_word([pull(s) for s in word])
            match = next((g for g, w in right_words.items() if w == image and g not in index.values()), None)
            if match is None:
                raise CompositionError(f"collar face {f} of the second cobordism has no partner")
            index[f] = match
            continue
        index[f] = len(faces)
        faces.append([pull(s) for s in word])

    glued = Cobordism(
        body=Complex(faces),
        left=x.left,
        right=_map_side(shifted.right, pull_map, index),
        marks=list(x.marks) + [image_end(end, pull_map[end[0]]) for end in shifted.marks],
    )
    result = compact(glued, keep=offset)
    logger.debug(f"Composed {len(x.body.faces)} + {len(y.body.faces)} faces into {len(result.body.faces)}")
    if verify:
        check_type_preserved([x.body, y.body], result.body)
    return result


def _resolve(back: Dict[int, int], letter: int) -> int:
    seen = set()
    while abs(letter) in back:
        if abs(letter) in seen:
            raise CompositionError("closing identifies a collar with itself")
        seen.add(abs(letter))
        letter = apply_letter(back, letter)
    return letter


def close(x: Cobordism, matching: Optional[Dict[int, int]] = None,
          require_unique: Optional[bool] = None, verify: bool = True) -> Cobordism:
    """Trace: glue x.right to x.left of the same cobordism"""
    if x.left is None or x.right is None:
        raise CompositionError("closing needs both collars")
    if matching is None and _charted(x, x):
        matching = chart_matching(x, x)
    phi = _pick_matching(x, x, matching, require_unique)
    back = invert(phi)
    left = set(x.left.faces)
    mapping = {e: _resolve(back, e) for e in x.body.edges}
    faces = [[apply_letter(mapping, s) for s in word]
             for f, word in enumerate(x.body.words) if f not in left]
    closed = Cobordism(body=Complex(faces),
                       marks=[image_end(end, mapping[end[0]]) for end in x.marks])
    result = compact(closed)
    if verify:
        check_type_preserved([x.body], result.body)
    return result


# =============================================================================
# DUALITY AND IDENTITIES
# =============================================================================

def _swap_chart(chart: Optional[Dict[int, int]]) -> Optional[Dict[int, int]]:
    return None if chart is None else compose_maps(chart, rho())


def dual(x: Cobordism) -> Cobordism:
    """Same body, sides exchanged; charts are re-read through ρ"""
    return Cobordism(
        body=x.body,
        left=None if x.right is None else replace(x.right, chart=_swap_chart(x.right.chart)),
        right=None if x.left is None else replace(x.left, chart=_swap_chart(x.left.chart)),
        marks=list(x.marks),
    )


def _loops_at(c: Complex, v: int) -> List[int]:
    return [e for e in c.boundary_edges if c.edge_vertices(e) == (v, v)]


def identity_cobordism(x: Cobordism, name: str = RIGHT) -> Cobordism:
    """The collar closure of one side as a cobordism C̄ -> C̄"""
    side = x.side(name)
    if side is None:
        raise CompositionError(f"cobordism has no {name} collar")
    body = x.closure(name)
    a, b = (side.inner, side.outer) if name == RIGHT else (side.outer, side.inner)
    all_faces = list(range(len(body.faces)))
    return Cobordism(
        body=body,
        left=CollarSide(faces=all_faces, boundary=_loops_at(body, body.vertex_of(a)),
                        outer=a, inner=b, chart=side.chart),
        right=CollarSide(faces=list(all_faces), boundary=_loops_at(body, body.vertex_of(b)),
                         outer=b, inner=a, chart=side.chart),
    )


def isomorphic_cobordisms(a: Cobordism, b: Cobordism) -> Optional[Isomorphism]:
    """First isomorphism of bodies carrying left to left and right to right"""
    return next(iter_isomorphisms(a.body, b.body, (a.tags, b.tags)), None)


def _swapped_tags(x: Cobordism) -> List[str]:
    return Cobordism(x.body, left=x.right, right=x.left).tags


def duality_involutions(x: Cobordism) -> List[Isomorphism]:
    """Involutive automorphisms of the body exchanging the two sides, least first"""
    found = [iso for iso in iter_isomorphisms(x.body, x.body, (x.tags, _swapped_tags(x))) if iso.is_involution()]
    found.sort(key=lambda iso: iso.sort_key())
    return found


def is_self_dual(x: Cobordism) -> bool:
    return next(iter_isomorphisms(x.body, x.body, (x.tags, _swapped_tags(x))), None) is not None


# =============================================================================
# EDGE FLIPS AND SPLITS
# =============================================================================

def flip_surgery(c: Complex, replacements: Sequence[Tuple[int, int, Any]]) -> Complex:
    """Replace face-word entries (face index, position, signed edge); positions refer to stored words"""
    words = [list(w) for w in c.words]
    for face, position, entry in replacements:
        if not 0 <= face < len(words):
            raise ValidationError(f"face index {face} out of range 0..{len(words) - 1}")
        if not 0 <= position < len(words[face]):
            raise ValidationError(f"position {position} out of range for face {face} of length {len(words[face])}")
        value = entry.to_int() if isinstance(entry, SignedEdge) else SignedEdge.from_int(int(entry)).to_int()
        words[face][position] = value
    logger.debug(f"Flip surgery with {len(replacements)} replacements")
    return Complex(words)


@dataclass
class Split:
    """X = (X⁻ ⊔ X⁺)/∼ along a separating collar"""
    minus: Cobordism
    plus: Cobordism

    def to_dict(self) -> Dict[str, Any]:
        return {'minus': self.minus.to_dict(), 'plus': self.plus.to_dict()}


def _crossing_end(c: Complex, col: Collar, v: int) -> End:
    e = col.crossing_edges[0]
    return (e, TAIL) if c.vertex_of((e, TAIL)) == v else (e, HEAD)


def _identity_chart(closure: Complex) -> Optional[Dict[int, int]]:
    k, _, _ = reference_closure()
    if Counter(k.words) == Counter(closure.words):
        return {e: e for e in k.edges}
    return None


def split_along_collar(c: Complex, col: Collar) -> Split:
    """
    Fillings X⁻ (x side plus the collar, right side = collar) and X⁺ (collar plus y side).

    Host labels are kept; when the collar closure is the reference K both
    sides carry the identity chart, so composing them with chart matching
    gives c back face for face.
    """
    if col.is_empty:
        raise CompositionError("collar is empty and does not separate")
    if col.host is not c:
        col = separating_collar(c, col.x, col.y)
    collar = set(col.faces)
    x_side, y_side = [], []
    for f in range(len(c.faces)):
        if f in collar:
            continue
        corners = set(c.corner_vertices(f))
        if corners == {col.x}:
            x_side.append(f)
        elif corners == {col.y}:
            y_side.append(f)
        else:
            raise CompositionError(f"collar between {col.x} and {col.y} does not separate face {f}")
    x_end, y_end = _crossing_end(c, col, col.x), _crossing_end(c, col, col.y)
    chart = _identity_chart(col.closure())
    if chart is not None and c.vertex_of((1, TAIL)) != col.x:
        chart = None

    minus_body = c.sub(x_side + col.faces)
    collar_minus = list(range(len(x_side), len(x_side) + len(col.faces)))
    minus = Cobordism(body=minus_body, right=CollarSide(
        faces=collar_minus, boundary=list(minus_body.boundary_edges),
        outer=y_end, inner=x_end, chart=chart))

    plus_body = c.sub(col.faces + y_side)
    plus = Cobordism(body=plus_body, left=CollarSide(
        faces=list(range(len(col.faces))), boundary=list(plus_body.boundary_edges),
        outer=x_end, inner=y_end, chart=None if chart is None else dict(chart)))
    minus.validate()
    plus.validate()
    logger.info(f"Split along the collar {col.x}|{col.y}: {len(minus_body.faces)} + {len(plus_body.faces)} faces")
    return Split(minus=minus, plus=plus)


def to_document_fields(x: Cobordism) -> Dict[str, Any]:
    """Field values of the cobordism file format"""
    fields: Dict[str, Any] = {'faces': [list(w) for w in x.body.words]}
    for name, side in ((LEFT, x.left), (RIGHT, x.right)):
        if side is None:
            continue
        fields[f'{name}.faces'] = list(side.faces)
        fields[f'{name}.boundary'] = list(side.boundary)
        if side.chart is not None:
            fields[f'{name}.chart'] = [[k, v] for k, v in sorted(side.chart.items())]
    if x.marks:
        fields['marks'] = [[label, end] for label, end in x.marks]
    return fields
