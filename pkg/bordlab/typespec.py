"""
Types and the Link Condition
Allowed-link types, type / strict-type membership and the girth ≥ 6 curvature check
"""
import math
from dataclasses import dataclass, field, asdict
from typing import Any, Dict, List, Optional, Tuple
import logging

from .catalog import identify_graph, named_graph
from .complex import Complex
from .errors import ValidationError
from .graphs import canonical_label, girth

logger = logging.getLogger(__name__)

BUILTIN_TYPES = {
    'rank74': ('moebius_kantor',),
    'A2q2': ('heawood',),
    'rank158': ('moebius_kantor', 'heawood'),
    'fake74': ('fake_moebius_kantor',),
}

# Combinatorial link condition for equilateral π/3 triangles
MIN_GIRTH = 6


@dataclass
class TypeSpec:
    """A finite set of allowed links; faces are equilateral triangles"""
    name: str
    link_names: Tuple[str, ...]
    labels: Dict[str, Tuple] = field(default_factory=dict, repr=False)

    def __post_init__(self):
        if not self.link_names:
            raise ValidationError(f"type {self.name} allows no links")
        if not self.labels:
            self.labels = {name: canonical_label(named_graph(name)) for name in self.link_names}

    def match(self, label: Tuple) -> Optional[str]:
        for name in self.link_names:
            if self.labels[name] == label:
                return name
        return None


def builtin_type(name: str) -> TypeSpec:
    if name not in BUILTIN_TYPES:
        raise ValidationError(f"unknown type {name!r}; known: {', '.join(BUILTIN_TYPES)}")
    return TypeSpec(name, BUILTIN_TYPES[name])


def _girth_value(value) -> Optional[int]:
    return None if value == math.inf else int(value)


def require_triangles(c: Complex):
    for i, word in enumerate(c.words):
        if len(word) != 3:
            raise ValidationError(f"face {i} has {len(word)} sides; only triangles are supported")


def interior_vertices(c: Complex) -> List[int]:
    """Vertices not incident to a boundary edge"""
    touched = set()
    for e in c.boundary_edges:
        touched.update(c.edge_vertices(e))
    return [v for v in range(c.vertex_count) if v not in touched]


@dataclass
class LinkSummary:
    vertex: int
    vertices: int
    edges: int
    girth: Optional[int]
    name: Optional[str]

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


def link_summary(c: Complex, v: int) -> LinkSummary:
    link = c.link(v)
    return LinkSummary(
        vertex=v,
        vertices=link.number_of_nodes(),
        edges=link.number_of_edges(),
        girth=_girth_value(girth(link)),
        name=identify_graph(link),
    )


def affiliated_type(c: Complex) -> Dict[Tuple, List[int]]:
    """Canonical labels of interior links, each with the interior vertices realizing it"""
    realized: Dict[Tuple, List[int]] = {}
    for v in interior_vertices(c):
        realized.setdefault(canonical_label(c.link(v)), []).append(v)
    return realized


def affiliated_names(c: Complex) -> List[str]:
    """Catalog names (or 'unnamed') of the affiliated type, sorted"""
    names = set()
    for vertices in affiliated_type(c).values():
        names.add(identify_graph(c.link(vertices[0])) or 'unnamed')
    return sorted(names)


@dataclass
class VertexDiagnostic:
    vertex: int
    interior: bool
    link_vertices: int
    link_edges: int
    girth: Optional[int]
    match: Optional[str]


@dataclass
class TypeVerdict:
    type_name: str
    strict: bool
    passed: bool
    vertices: List[VertexDiagnostic] = field(default_factory=list)
    missing: List[str] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


def check_type(c: Complex, t: TypeSpec, strict: bool = False) -> TypeVerdict:
    """Every interior link is allowed; with strict, every allowed link also occurs"""
    require_triangles(c)
    interior = set(interior_vertices(c))
    diagnostics = []
    realized = set()
    passed = True
    for v in range(c.vertex_count):
        link = c.link(v)
        match = t.match(canonical_label(link)) if v in interior else None
        diagnostics.append(VertexDiagnostic(
            vertex=v,
            interior=v in interior,
            link_vertices=link.number_of_nodes(),
            link_edges=link.number_of_edges(),
            girth=_girth_value(girth(link)),
            match=match,
        ))
        if v in interior:
            if match is None:
                passed = False
            else:
                realized.add(match)
    missing = [name for name in t.link_names if name not in realized] if strict else []
    if missing:
        passed = False
    logger.debug(f"check_type {t.name} strict={strict}: passed={passed}, realized={sorted(realized)}")
    return TypeVerdict(type_name=t.name, strict=strict, passed=passed, vertices=diagnostics, missing=missing)


@dataclass
class CurvatureVerdict:
    passed: bool
    girths: Dict[int, Optional[int]] = field(default_factory=dict)
    failures: List[int] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        data = asdict(self)
        data['girths'] = {str(v): g for v, g in self.girths.items()}
        return data


def curvature_check(c: Complex) -> CurvatureVerdict:
    """Link condition: every interior link has girth at least 6"""
    require_triangles(c)
    girths = {}
    failures = []
    for v in interior_vertices(c):
        value = _girth_value(girth(c.link(v)))
        girths[v] = value
        if value is not None and value < MIN_GIRTH:
            failures.append(v)
    return CurvatureVerdict(passed=not failures, girths=girths, failures=failures)
