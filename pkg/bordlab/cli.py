"""
Command Line
One subcommand per toolkit operation; exit 0 on success, 1 on usage or input errors, 2 on a failed check
"""
import argparse
import logging
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional

from .catalog import NERVES, nerve
from .classifier import classify_st
from .cobordism import (
    Cobordism, chart_matching, compose, flip_surgery, from_document, split_along_collar,
)
from .collars import (
    collar_from_nerve, collar_predicates, h_collar_certificate, separating_collar, st_lemma_enumerate,
)
from .complex import HEAD, TAIL, Complex, SignedEdge
from .config import config
from .corpus import CORPUS_NAMES, FAKE_FLIP, corpus_path
from .covers import enumerate_double_covers, find_free_involution, verify_cover
from .decomposition import base_graph, fundamental_group, model_group, weight_equation_check
from .errors import BordlabError, UsageError, ValidationError
from .homology import homology
from .isomorphism import canonical_pointed, isomorphic
from .omega import FILLING_MODES, SHAPES, OmegaKit, OmegaSpec, orbit_map_fibers
from .parsers import get_parser
from .reports import (
    format_cobordism, format_collar, format_complex, format_graph, format_homology,
    format_matching, format_predicates, format_presentation, graph_to_dict, to_json,
)
from .typespec import BUILTIN_TYPES, builtin_type, check_type, curvature_check, link_summary

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_FAILED = 2


@dataclass
class Outcome:
    """What a subcommand produced: text for standard output, data for --json, and the check verdict"""
    text: str
    data: Any = field(default_factory=dict)
    passed: bool = True


class BordlabArgumentParser(argparse.ArgumentParser):
    """Raises instead of exiting so run() owns the exit code"""

    def error(self, message):
        raise UsageError(message)


# =============================================================================
# INPUTS
# =============================================================================

def resolve_path(name: str) -> Path:
    """A file path, or the name of a shipped complex (with or without .cplx)"""
    path = Path(name)
    if path.exists():
        return path
    stem = path.name[:-len('.cplx')] if path.name.endswith('.cplx') else path.name
    if stem in CORPUS_NAMES:
        logger.debug(f"{name} not found on disk, using the shipped {stem}")
        return corpus_path(stem)
    raise ValidationError(f"no such file: {name}")


def read_complex(name: str) -> Complex:
    return get_parser('complex').parse_file(resolve_path(name))


def read_cobordism(name: str) -> Cobordism:
    return from_document(get_parser('cobordism').parse_file(resolve_path(name)))


def read_matching(name: str) -> Dict[int, int]:
    return get_parser('matching').parse_file(resolve_path(name))


def span_vertices(c: Complex, args) -> tuple:
    """--x/--y, defaulting to the tail and head of the least edge label"""
    if not c.edges:
        raise ValidationError("complex has no edges")
    x = args.x if args.x is not None else c.vertex_of((c.edges[0], TAIL))
    y = args.y if args.y is not None else c.vertex_of((c.edges[0], HEAD))
    c.check_vertex(x)
    c.check_vertex(y)
    if x == y:
        raise ValidationError(f"span vertices coincide ({x}); pass --x and --y")
    return x, y


def parse_replacement(text: str):
    """face:position:signed-label, e.g. 0:1:-2"""
    parts = text.split(':')
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"expected face:position:label, got {text!r}")
    try:
        face, position, label = (int(p) for p in parts)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected integers in {text!r}")
    if label == 0:
        raise argparse.ArgumentTypeError("zero literal")
    return face, position, SignedEdge.from_int(label)


def parse_coefficients(text: str) -> Optional[int]:
    if text == 'Z':
        return None
    if text == 'Q':
        return 0
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"coefficients must be Z, Q or a prime, got {text!r}")


def _complex_text(c: Complex, args) -> str:
    return format_complex(c, canonical=args.canonical)


def _verdict(passed: bool) -> str:
    return 'pass' if passed else 'FAIL'


# =============================================================================
# COMPLEX COMMANDS
# =============================================================================

def cmd_links(args) -> Outcome:
    c = read_complex(args.file)
    vertices = [args.vertex] if args.vertex is not None else range(c.vertex_count)
    blocks, data = [], []
    for v in vertices:
        summary = link_summary(c, v)
        link = c.link(v)
        blocks.append(f"# vertex {v}: girth {summary.girth if summary.girth is not None else 'inf'}\n"
                      f"{format_graph(link)}")
        data.append({**summary.to_dict(), 'graph': graph_to_dict(link)})
    return Outcome('\n\n'.join(blocks), data)


def cmd_check_type(args) -> Outcome:
    c = read_complex(args.file)
    verdict = check_type(c, builtin_type(args.type), strict=args.strict)
    lines = [f"type {verdict.type_name}{' (strict)' if verdict.strict else ''}: {_verdict(verdict.passed)}"]
    for d in verdict.vertices:
        where = 'interior' if d.interior else 'boundary'
        girth = d.girth if d.girth is not None else 'inf'
        lines.append(f"vertex {d.vertex}: {where}, {d.link_vertices} vertices, {d.link_edges} edges, "
                     f"girth {girth}, match {d.match or 'none'}")
    if verdict.missing:
        lines.append(f"missing: {' '.join(verdict.missing)}")
    return Outcome('\n'.join(lines), verdict, verdict.passed)


def cmd_curvature(args) -> Outcome:
    verdict = curvature_check(read_complex(args.file))
    lines = [f"curvature: {_verdict(verdict.passed)}"]
    for v, g in sorted(verdict.girths.items()):
        lines.append(f"vertex {v}: girth {g if g is not None else 'inf'}")
    return Outcome('\n'.join(lines), verdict, verdict.passed)


def cmd_homology(args) -> Outcome:
    report = homology(read_complex(args.file), args.coefficients)
    return Outcome(format_homology(report), report)


def cmd_euler(args) -> Outcome:
    chi = read_complex(args.file).euler_characteristic()
    return Outcome(f"chi = {chi}", {'euler_characteristic': chi})


def cmd_covers(args) -> Outcome:
    c = read_complex(args.file)
    covers = enumerate_double_covers(c)
    blocks = []
    for k, cover in enumerate(covers, start=1):
        support = ' '.join(str(e) for e in cover.cocycle.support())
        blocks.append(f"# cover {k}: cocycle support {support}\n{_complex_text(cover.cover, args)}")
        if args.out_dir:
            out = Path(args.out_dir)
            out.mkdir(parents=True, exist_ok=True)
            (out / f"cover-{k}.cplx").write_text(format_complex(cover.cover) + '\n')
            (out / f"cover-{k}.map").write_text(format_matching(cover.edge_map) + '\n')
            logger.info(f"Wrote cover {k} to {out}")
    text = '\n\n'.join(blocks) if blocks else "no double covers"
    return Outcome(text, [cover.to_dict() for cover in covers])


def cmd_verify_cover(args) -> Outcome:
    verdict = verify_cover(read_complex(args.cover), read_complex(args.base), read_matching(args.map))
    lines = [f"cover: {_verdict(verdict.passed)}"] + verdict.problems
    return Outcome('\n'.join(lines), verdict, verdict.passed)


def cmd_involution(args) -> Outcome:
    iso = find_free_involution(read_complex(args.file))
    if iso is None:
        return Outcome("free involution: none", {'involution': None}, passed=False)
    return Outcome(f"free involution:\n{format_matching(iso.mapping)}", {'involution': iso.to_dict()})


def cmd_weights(args) -> Outcome:
    eq = weight_equation_check(read_complex(args.file))
    lines = [
        f"crossing faces: {' '.join(str(f) for f in eq.crossing_faces)}",
        f"face sum: {eq.face_sum}",
        f"segment sum: {eq.segment_sum}",
        f"edge weight sum: {eq.edge_weight_sum}",
        f"weight equation: {_verdict(eq.passed)}",
    ]
    return Outcome('\n'.join(lines), eq, eq.passed)


def cmd_base_graph(args) -> Outcome:
    g = base_graph(read_complex(args.file))
    return Outcome(format_graph(g, annotate=False), graph_to_dict(g))


def cmd_model_group(args) -> Outcome:
    p = model_group(read_complex(args.file), args.vertex)
    return Outcome(format_presentation(p), p)


def cmd_presentation(args) -> Outcome:
    p = fundamental_group(read_complex(args.file))
    return Outcome(format_presentation(p), p)


def cmd_iso(args) -> Outcome:
    a, b = read_complex(args.first), read_complex(args.second)
    iso = isomorphic(a, b, pointed=tuple(args.pointed) if args.pointed else None)
    if iso is None:
        return Outcome("not isomorphic", {'isomorphism': None}, passed=False)
    return Outcome(f"isomorphic\n{format_matching(iso.mapping)}", {'isomorphism': iso.to_dict()})


def cmd_surgery_flip(args) -> Outcome:
    c = read_complex(args.file)
    replacements = list(args.replace or [])
    if args.fake:
        replacements = FAKE_FLIP + replacements
    if not replacements:
        raise UsageError("surgery-flip needs --replace or --fake")
    flipped = flip_surgery(c, replacements)
    return Outcome(_complex_text(flipped, args), {'faces': [list(w) for w in flipped.words]})


# =============================================================================
# COLLAR COMMANDS
# =============================================================================

def _collar(args):
    if getattr(args, 'nerve', None):
        if args.nerve not in NERVES:
            raise ValidationError(f"unknown nerve {args.nerve!r}; known: {', '.join(NERVES)}")
        return collar_from_nerve(nerve(args.nerve))
    if not args.file:
        raise UsageError("a complex file or --nerve is required")
    c = read_complex(args.file)
    x, y = span_vertices(c, args)
    return separating_collar(c, x, y)


def cmd_collar(args) -> Outcome:
    col = _collar(args)
    return Outcome(format_collar(col), col)


def cmd_predicates(args) -> Outcome:
    col = _collar(args)
    flags = collar_predicates(col)
    certificate = h_collar_certificate(col)
    text = f"{format_predicates(col)}\nh-collar: {'yes' if certificate else 'no'}"
    data = {**flags.to_dict(), 'certificate': certificate.to_dict() if certificate else None}
    return Outcome(text, data)


def cmd_st_enum(args) -> Outcome:
    graphs = st_lemma_enumerate(args.vertices, raw=args.raw)
    blocks = [f"count: {len(graphs)}"] + [format_graph(g) for g in graphs]
    return Outcome('\n\n'.join(blocks), [graph_to_dict(g) for g in graphs])


# =============================================================================
# COBORDISM COMMANDS
# =============================================================================

def cmd_compose(args) -> Outcome:
    x, y = read_cobordism(args.first), read_cobordism(args.second)
    if args.matching and args.charts:
        raise UsageError("--matching and --charts are exclusive")
    matching = None
    if args.matching:
        matching = read_matching(args.matching)
    elif args.charts:
        matching = chart_matching(x, y)
    result = compose(x, y, matching=matching, require_unique=args.require_unique or None)
    return Outcome(format_cobordism(result), result)


def cmd_split(args) -> Outcome:
    c = read_complex(args.file)
    x, y = span_vertices(c, args)
    split = split_along_collar(c, separating_collar(c, x, y))
    if args.out_dir:
        out = Path(args.out_dir)
        out.mkdir(parents=True, exist_ok=True)
        (out / 'minus.cob').write_text(format_cobordism(split.minus) + '\n')
        (out / 'plus.cob').write_text(format_cobordism(split.plus) + '\n')
        logger.info(f"Wrote split fillings to {out}")
    text = f"# minus\n{format_cobordism(split.minus)}\n\n# plus\n{format_cobordism(split.plus)}"
    return Outcome(text, split)


def cmd_omega(args) -> Outcome:
    sequence = get_parser('omega').parse(args.seq)
    built = OmegaKit(args.fillings).build(OmegaSpec(sequence, args.shape, args.base))
    pointed = built.pointed
    if args.canonical:
        pointed = canonical_pointed(pointed)
    text = f"{format_complex(pointed.complex)}\nbasepoint: {pointed.basepoint}"
    return Outcome(text, built)


def cmd_fibers(args) -> Outcome:
    report = orbit_map_fibers(args.n, args.shape, OmegaKit(args.fillings))
    lines = [f"fiber: {' | '.join(members)}" for members in report.fibers]
    lines.append(f"largest fiber: {report.max_fiber}")
    lines.append(f"orbit map: {_verdict(report.passed)}")
    return Outcome('\n'.join(lines), report, report.passed)


def cmd_classify_st(args) -> Outcome:
    report = classify_st()
    lines = []
    for check in report.checkpoints:
        line = f"{check.name}: {_verdict(check.passed)}"
        if not check.passed:
            line += f" (expected {check.expected}, observed {check.observed})"
        lines.append(line)
    for k, cls in enumerate(report.classes, start=1):
        lines.append(f"class {k}: rank {cls.rank}, collars {' '.join(cls.collar_types)}, "
                     f"self-dual {'yes' if cls.self_dual else 'no'}, "
                     f"duality involutions {cls.duality_involutions}")
        if args.show:
            lines.append(format_cobordism(cls.representative))
    return Outcome('\n'.join(lines), report, report.passed)


# =============================================================================
# PARSER AND DISPATCH
# =============================================================================

def build_parser() -> argparse.ArgumentParser:
    common = BordlabArgumentParser(add_help=False)
    common.add_argument('--json', action='store_true', help="print the report as JSON")
    common.add_argument('--canonical', action='store_true', help="print complexes in canonical form")
    common.add_argument('--verbose', '-v', action='store_true', help="debug logging")
    common.add_argument('--config', help="configuration file")

    parser = BordlabArgumentParser(prog='bordlab', description="Face-word 2-complex toolkit")
    sub = parser.add_subparsers(dest='command', required=True, parser_class=BordlabArgumentParser)

    def command(name: str, handler: Callable, help_text: str, file_arg: bool = True):
        p = sub.add_parser(name, parents=[common], help=help_text)
        if file_arg:
            p.add_argument('file', help="complex file or shipped name")
        p.set_defaults(handler=handler)
        return p

    p = command('links', cmd_links, "vertex links")
    p.add_argument('--vertex', type=int)
    p = command('check-type', cmd_check_type, "type membership")
    p.add_argument('--type', required=True, choices=sorted(BUILTIN_TYPES))
    p.add_argument('--strict', action='store_true')
    command('curvature', cmd_curvature, "girth >= 6 link condition")
    p = command('homology', cmd_homology, "cellular homology")
    p.add_argument('--coefficients', type=parse_coefficients, default=None,
                   help="Z (default), Q or a prime p")
    command('euler', cmd_euler, "Euler characteristic")
    p = command('covers', cmd_covers, "double covers")
    p.add_argument('--out-dir')
    p = command('verify-cover', cmd_verify_cover, "check a covering map", file_arg=False)
    p.add_argument('cover')
    p.add_argument('base')
    p.add_argument('map')
    command('involution', cmd_involution, "free involution")
    for name, handler, help_text in (('collar', cmd_collar, "separating collar"),
                                     ('predicates', cmd_predicates, "collar predicates")):
        p = command(name, handler, help_text, file_arg=False)
        p.add_argument('file', nargs='?')
        p.add_argument('--x', type=int)
        p.add_argument('--y', type=int)
        p.add_argument('--nerve', help="catalog nerve instead of a complex")
    p = command('surgery-flip', cmd_surgery_flip, "rewrite face entries")
    p.add_argument('--replace', action='append', type=parse_replacement, metavar='FACE:POS:LABEL')
    p.add_argument('--fake', action='store_true', help="apply the X′ -> X″ flip")
    p = command('compose', cmd_compose, "glue two cobordisms", file_arg=False)
    p.add_argument('first')
    p.add_argument('second')
    p.add_argument('--matching')
    p.add_argument('--charts', action='store_true',
                   help="require the chart matching (the default when both sides carry charts)")
    p.add_argument('--require-unique', action='store_true')
    p = command('split', cmd_split, "split along a separating collar")
    p.add_argument('--x', type=int)
    p.add_argument('--y', type=int)
    p.add_argument('--out-dir')
    p = command('omega', cmd_omega, "build an ω complex", file_arg=False)
    p.add_argument('--seq', required=True)
    p.add_argument('--shape', choices=SHAPES, default='segment')
    p.add_argument('--base', type=int, default=0)
    p.add_argument('--fillings', choices=FILLING_MODES)
    p = command('fibers', cmd_fibers, "fibers of the ω orbit map", file_arg=False)
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--shape', choices=SHAPES, default='segment')
    p.add_argument('--fillings', choices=FILLING_MODES)
    p = command('iso', cmd_iso, "complex isomorphism", file_arg=False)
    p.add_argument('first')
    p.add_argument('second')
    p.add_argument('--pointed', type=int, nargs=2, metavar=('A', 'B'))
    p = command('classify-st', cmd_classify_st, "rank 7/4 cobordism classification", file_arg=False)
    p.add_argument('--show', action='store_true', help="print the class representatives")
    p = command('st-enum', cmd_st_enum, "cubic multigraphs", file_arg=False)
    p.add_argument('--vertices', type=int, default=4)
    p.add_argument('--raw', action='store_true')
    command('weights', cmd_weights, "weight equation")
    command('base-graph', cmd_base_graph, "base graph")
    p = command('model-group', cmd_model_group, "model group presentation")
    p.add_argument('--vertex', type=int, default=0)
    command('presentation', cmd_presentation, "fundamental group presentation")
    return parser


def run(argv: Optional[List[str]] = None) -> int:
    """Parse argv, run one subcommand, print its report; returns the exit code"""
    try:
        args = build_parser().parse_args(argv)
        if args.config:
            config.reload(args.config)
        level = logging.DEBUG if args.verbose else config.get('logging', 'level', default='INFO')
        logging.getLogger('bordlab').setLevel(level)
        logger.debug(f"Running {args.command}")
        outcome = args.handler(args)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_OK
    except (BordlabError, OSError) as e:
        logger.error(f"{type(e).__name__}: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR

    print(to_json(outcome.data) if args.json else outcome.text)
    if not outcome.passed:
        logger.warning(f"{args.command}: check failed")
        return EXIT_FAILED
    return EXIT_OK
