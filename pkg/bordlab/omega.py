"""
ω-Families
Segment and circle complexes assembled from the two rank 7/4 blocks, and fibers of the orbit map
"""
from dataclasses import dataclass, field
from itertools import product
from typing import Any, Dict, List, Optional, Sequence, Tuple
import logging

from .catalog import moebius_kantor
from .classifier import st_blocks
from .cobordism import (
    Cobordism, Split, chart_matching, close, compose, dual, split_along_collar,
)
from .collars import separating_collar
from .complex import HEAD, TAIL, PointedComplex
from .config import config
from .corpus import load_complex
from .errors import CompositionError, ValidationError
from .graphs import same_graph
from .isomorphism import canonical_key

logger = logging.getLogger(__name__)

SYMBOLS = ('3/2', '2')
SHAPES = ('segment', 'circle')
FILLING_MODES = ('split', 'mirrored')


@dataclass
class OmegaSpec:
    """A word over {3/2, 2}, read along a segment or around a circle, with a marked block"""
    sequence: Tuple[str, ...]
    shape: str = 'segment'
    base: int = 0

    def __post_init__(self):
        self.sequence = tuple(self.sequence)
        bad = [s for s in self.sequence if s not in SYMBOLS]
        if bad:
            raise ValidationError(f"unknown block symbols {bad}; use 3/2 and 2")
        if self.shape not in SHAPES:
            raise ValidationError(f"shape must be segment or circle, got {self.shape!r}")
        if self.shape == 'circle' and len(self.sequence) < 2:
            raise ValidationError("a circle needs at least two blocks")
        if not self.sequence:
            raise ValidationError("a segment needs at least one block")
        if not 0 <= self.base < len(self.sequence):
            raise ValidationError(f"basepoint index {self.base} outside 0..{len(self.sequence) - 1}")

    @property
    def word(self) -> str:
        return ' '.join(self.sequence)


def xprime_split() -> Split:
    host = load_complex('xprime')
    col = separating_collar(host, host.vertex_of((1, TAIL)), host.vertex_of((1, HEAD)))
    return split_along_collar(host, col)


@dataclass
class OmegaComplex:
    spec: OmegaSpec
    cobordism: Cobordism
    basepoint: int

    @property
    def pointed(self) -> PointedComplex:
        return PointedComplex(self.cobordism.body, self.basepoint)

    def to_dict(self) -> Dict[str, Any]:
        body = self.cobordism.body
        return {
            'sequence': list(self.spec.sequence),
            'shape': self.spec.shape,
            'base': self.spec.base,
            'basepoint': self.basepoint,
            'faces': [list(w) for w in body.words],
            'vertices': body.vertex_count,
            'edges': len(body.edges),
        }


class OmegaKit:
    """Blocks and end fillings, built once"""

    def __init__(self, fillings: Optional[str] = None):
        self.fillings = fillings or config.get('omega', 'fillings', default='split')
        if self.fillings not in FILLING_MODES:
            raise ValidationError(f"fillings must be one of {', '.join(FILLING_MODES)}, got {self.fillings!r}")
        self.blocks = st_blocks()
        split = xprime_split()
        if self.fillings == 'split':
            self.start, self.end = split.minus, split.plus
        else:
            self.start, self.end = dual(split.plus), dual(split.minus)
        self._link = moebius_kantor()

    def _glue(self, x: Cobordism, y: Cobordism) -> Cobordism:
        return compose(x, y, matching=chart_matching(x, y), verify=False)

    def build(self, spec: OmegaSpec) -> OmegaComplex:
        if spec.shape == 'segment':
            current = self.start
            for symbol in spec.sequence:
                current = self._glue(current, self.blocks[symbol])
            current = self._glue(current, self.end)
        else:
            current = self.blocks[spec.sequence[0]]
            for symbol in spec.sequence[1:]:
                current = self._glue(current, self.blocks[symbol])
            current = close(current, matching=chart_matching(current, current), verify=False)
        self.validate(current)
        basepoint = current.mark_vertices()[spec.base]
        logger.debug(f"ω {spec.shape} ({spec.word}): {len(current.body.faces)} faces, "
                     f"{current.body.vertex_count} vertices")
        return OmegaComplex(spec=spec, cobordism=current, basepoint=basepoint)

    def validate(self, x: Cobordism):
        for v in range(x.body.vertex_count):
            if not same_graph(x.body.link(v), self._link):
                raise CompositionError(f"vertex {v} of the assembled complex does not have a Möbius–Kantor link")


def build_omega(spec: OmegaSpec, kit: Optional[OmegaKit] = None) -> OmegaComplex:
    return (kit or OmegaKit()).build(spec)


def words(length: int) -> List[Tuple[str, ...]]:
    return list(product(SYMBOLS, repeat=length))


def reflect(word: Sequence[str]) -> Tuple[str, ...]:
    """Reflection of a circular word fixing position 0"""
    return (word[0],) + tuple(reversed(word[1:]))


@dataclass
class FiberReport:
    shape: str
    n: int
    words: int
    fibers: List[List[str]] = field(default_factory=list)
    max_fiber: int = 0
    reflections_only: bool = True
    passed: bool = True

    def to_dict(self) -> Dict[str, Any]:
        return dict(self.__dict__)


def orbit_map_fibers(n: int, shape: str = 'segment', kit: Optional[OmegaKit] = None) -> FiberReport:
    """
    Group the complexes X_ω pointed at block 0 by pointed isomorphism.

    Segments use words of length n + 1 and must be injective; circles use
    words of length n and may only identify a word with its reflection.
    """
    if shape not in SHAPES:
        raise ValidationError(f"shape must be segment or circle, got {shape!r}")
    limit_key = 'segment_max_length' if shape == 'segment' else 'circle_max_length'
    limit = config.get('omega', limit_key, default=3 if shape == 'segment' else 5)
    if n > limit:
        raise ValidationError(f"{shape} length {n} exceeds the configured bound {limit}")
    length = n + 1 if shape == 'segment' else n
    if shape == 'circle' and length < 2:
        raise ValidationError("a circle needs at least two blocks")
    if length < 1:
        raise ValidationError("a segment needs at least one block")
    kit = kit or OmegaKit()

    groups: Dict[Tuple, List[Tuple[str, ...]]] = {}
    for word in words(length):
        built = kit.build(OmegaSpec(word, shape, 0))
        key = canonical_key(built.cobordism.body, basepoint=built.basepoint)
        groups.setdefault(key, []).append(word)

    fibers = [members for _, members in sorted(groups.items(), key=lambda item: item[1][0])]
    report = FiberReport(shape=shape, n=n, words=2 ** length,
                         fibers=[[' '.join(w) for w in members] for members in fibers])
    report.max_fiber = max(len(members) for members in fibers)
    for members in fibers:
        if len(members) == 1:
            continue
        if shape == 'segment' or len(members) > 2 or reflect(members[0]) != members[1]:
            report.reflections_only = False
    limit_size = 1 if shape == 'segment' else 2
    report.passed = report.max_fiber <= limit_size and report.reflections_only
    if shape == 'circle':
        expected_pairs = sum(1 for w in words(length) if reflect(w) != w) // 2
        paired = sum(1 for members in fibers if len(members) == 2)
        report.passed = report.passed and paired == expected_pairs
    logger.info(f"Fibers of the {shape} orbit map at n = {n}: {len(fibers)} classes, "
                f"largest {report.max_fiber}")
    return report
