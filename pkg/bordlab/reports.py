"""
Text Reports
Renders complexes, graphs, homology, presentations, collars and cobordism documents

Every renderer returns a string without a trailing newline; the CLI prints it.
JSON output goes through to_json so key order and indentation are stable.
"""
import json
from typing import Any, Dict, Iterable, List, Optional
import logging

import networkx as nx

from .catalog import identify_graph
from .cobordism import Cobordism, to_document_fields
from .collars import Collar, classify_nerve, collar_predicates
from .complex import Complex
from .config import config
from .decomposition import Presentation
from .graphs import COLOR, canonical_label
from .homology import HomologyReport
from .isomorphism import canonical_form

logger = logging.getLogger(__name__)


def _ints(values: Iterable[int]) -> str:
    return '[' + ','.join(str(v) for v in values) + ']'


def _rows(rows: Iterable[Iterable[int]]) -> str:
    """One row per line, no padding"""
    rendered = [_ints(row) for row in rows]
    if not rendered:
        return '[]'
    return '[' + ',\n'.join(rendered) + ']'


# =============================================================================
# COMPLEXES AND GRAPHS
# =============================================================================

def format_complex(c: Complex, canonical: bool = False) -> str:
    """[[...],\\n[...]] with one face per line"""
    if canonical:
        c = canonical_form(c)
    return _rows(c.words)


def graph_edges(g: nx.MultiGraph) -> List[List[Any]]:
    """Edges as [u, v] or [u, v, color], sorted, with nodes renumbered 0..n-1"""
    index = {v: i for i, v in enumerate(sorted(g.nodes()))}
    rows = []
    for u, v, d in g.edges(data=True):
        a, b = sorted((index[u], index[v]))
        rows.append([a, b] + ([d[COLOR]] if COLOR in d else []))
    return sorted(rows, key=lambda row: (row[0], row[1], str(row[2:])))


def format_graph(g: nx.MultiGraph, annotate: bool = True) -> str:
    lines = [f"n={g.number_of_nodes()}"]
    for row in graph_edges(g):
        line = f"{row[0]} {row[1]}"
        if len(row) == 3:
            line += f" color={row[2]}"
        lines.append(line)
    if annotate:
        name = identify_graph(g)
        if name:
            lines.append(f"name={name}")
    return '\n'.join(lines)


def graph_to_dict(g: nx.MultiGraph) -> Dict[str, Any]:
    return {
        'vertices': g.number_of_nodes(),
        'edges': graph_edges(g),
        'name': identify_graph(g),
    }


# =============================================================================
# HOMOLOGY AND PRESENTATIONS
# =============================================================================

def _group(coefficients: str, rank: int, torsion: Optional[List[int]] = None) -> str:
    if coefficients == 'Z':
        parts = [f"Z^{rank}"] if rank or not torsion else []
        parts += [f"Z/{d}" for d in torsion or []]
        return ' (+) '.join(parts)
    if coefficients == 'Q':
        return f"Q^{rank}"
    return f"({coefficients})^{rank}"


def format_homology(report: HomologyReport) -> str:
    return '\n'.join([
        f"H0 = {_group(report.coefficients, report.h0)}",
        f"H1 = {_group(report.coefficients, report.h1, report.torsion)}",
        f"H2 = {_group(report.coefficients, report.h2)}",
    ])


def format_presentation(p: Presentation) -> str:
    lines = ['gens: ' + ' '.join(f"g{g}" for g in p.generators)]
    for relator in p.relators:
        letters = [f"g{s}" if s > 0 else f"g{-s}^-1" for s in relator]
        lines.append('rel: ' + (' '.join(letters) if letters else '1'))
    return '\n'.join(lines)


# =============================================================================
# COLLARS
# =============================================================================

def format_canonical_nerve(g: nx.MultiGraph) -> str:
    """Colored nerve relabeled by its canonical certificate, so equal nerves print alike"""
    n, edges = canonical_label(g, colored=True)
    lines = [f"canonical n={n}"]
    lines += [f"{u} {v} color={c}" if c else f"{u} {v}" for u, v, c in edges]
    return '\n'.join(lines)


def format_collar(col: Collar) -> str:
    if col.is_empty:
        return "nerve: empty"
    kind = classify_nerve(col)
    lines = [
        f"nerve: {kind or 'unknown'}",
        f"span: {col.x} {col.y}",
        f"faces: {' '.join(str(f) for f in col.faces)}",
        f"crossing: {' '.join(str(e) for e in col.crossing_edges)}",
    ]
    if kind is None:
        lines.append(format_canonical_nerve(col.nerve))
    else:
        lines.append(format_graph(col.nerve, annotate=False))
    flags = collar_predicates(col).to_dict()
    lines.append('predicates: ' + ' '.join(f"{k}={str(v).lower()}" for k, v in flags.items()))
    return '\n'.join(lines)


def format_predicates(col: Collar) -> str:
    return '\n'.join(f"{k}: {str(v).lower()}" for k, v in collar_predicates(col).to_dict().items())


# =============================================================================
# COBORDISM DOCUMENTS AND MATCHINGS
# =============================================================================

def format_cobordism(x: Cobordism) -> str:
    """Cobordism file text; CobordismParser reads it back"""
    lines = []
    for key, value in to_document_fields(x).items():
        if key == 'faces' or (value and isinstance(value[0], list)):
            lines.append(f"{key} = {_rows(value)}")
        else:
            lines.append(f"{key} = {_ints(value)}")
    return '\n'.join(lines)


def format_matching(mapping: Dict[int, int]) -> str:
    return '\n'.join(f"{k} -> {v}" for k, v in sorted(mapping.items()))


def to_json(data: Any) -> str:
    """json.dumps with the configured indent and sorted keys"""
    if hasattr(data, 'to_dict'):
        data = data.to_dict()
    return json.dumps(data, indent=config.get('output', 'json_indent', default=2), sort_keys=True)
