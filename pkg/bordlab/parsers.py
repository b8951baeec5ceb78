"""
Document Parsers for bordlab
Reads complexes, cobordism documents, edge matchings and ω sequences

Patterns are centralized in formats.py
"""
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple
import logging

from bordlab.complex import Complex
from bordlab.errors import ParseError, ValidationError
from bordlab.formats import COBORDISM_KEYS, get_patterns

logger = logging.getLogger(__name__)


@dataclass
class Token:
    kind: str       # 'symbol', 'int' or 'key'
    value: Any
    line: int
    column: int


class TokenStream:
    """Tokens of a bracket-notation document with 1-based positions"""

    def __init__(self, text: str, pattern):
        self.tokens: List[Token] = []
        self.position = 0
        line, column, offset = 1, 1, 0
        while offset < len(text):
            match = pattern.match(text, offset)
            if not match:
                raise ParseError(f"unexpected character {text[offset]!r}", line, column)
            groups = match.groups()
            if groups[2] is not None:
                self.tokens.append(Token('symbol', groups[2], line, column))
            elif groups[3] is not None:
                self.tokens.append(Token('int', int(groups[3]), line, column))
            elif len(groups) > 4 and groups[4] is not None:
                self.tokens.append(Token('key', groups[4], line, column))
            consumed = match.group(0)
            newlines = consumed.count('\n')
            if newlines:
                line += newlines
                column = len(consumed) - consumed.rfind('\n')
            else:
                column += len(consumed)
            offset = match.end()
        self.end = (line, column)

    def peek(self) -> Optional[Token]:
        return self.tokens[self.position] if self.position < len(self.tokens) else None

    def next(self) -> Token:
        token = self.peek()
        if token is None:
            raise ParseError("unexpected end of input", *self.end)
        self.position += 1
        return token

    def expect(self, symbol: str) -> Token:
        token = self.next()
        if token.kind != 'symbol' or token.value != symbol:
            raise ParseError(f"expected {symbol!r}, found {token.value!r}", token.line, token.column)
        return token

    def at_symbol(self, symbol: str) -> bool:
        token = self.peek()
        return token is not None and token.kind == 'symbol' and token.value == symbol

    def read_ints(self, allow_zero: bool = False, what: str = "list") -> List[int]:
        """'[' int (',' int)* ']' ; an empty list is allowed"""
        self.expect('[')
        values: List[int] = []
        if self.at_symbol(']'):
            self.next()
            return values
        while True:
            token = self.next()
            if token.kind != 'int':
                raise ParseError(f"expected an integer in {what}, found {token.value!r}",
                                 token.line, token.column)
            if token.value == 0 and not allow_zero:
                raise ParseError("zero literal", token.line, token.column)
            values.append(token.value)
            if self.at_symbol(','):
                self.next()
                continue
            self.expect(']')
            return values

    def read_lists(self, allow_zero: bool = False, allow_empty: bool = False,
                   what: str = "face") -> List[List[int]]:
        """'[' list (',' list)* ']' ; '[]' is the empty outer list"""
        self.expect('[')
        rows: List[List[int]] = []
        if self.at_symbol(']'):
            self.next()
            return rows
        while True:
            start = self.peek()
            row = self.read_ints(allow_zero, what)
            if not row and not allow_empty:
                raise ParseError(f"empty {what}", start.line, start.column)
            rows.append(row)
            if self.at_symbol(','):
                self.next()
                continue
            self.expect(']')
            return rows

    def finish(self):
        token = self.peek()
        if token is not None:
            raise ParseError(f"trailing input {token.value!r}", token.line, token.column)


class ComplexParser:
    """Parser for the bracket notation [[1,2,3],[...]]"""

    def __init__(self):
        self.patterns = get_patterns('complex')

    def parse(self, text: str) -> Complex:
        stream = TokenStream(text, self.patterns['token'])
        faces = stream.read_lists(what="face")
        stream.finish()
        try:
            return Complex(faces)
        except ValidationError as e:
            raise ParseError(str(e)) from e

    def parse_file(self, path) -> Complex:
        path = Path(path)
        try:
            return self.parse(path.read_text())
        except ParseError as e:
            raise ParseError(f"{path}: {e}") from e


@dataclass
class CobordismDocument:
    """Raw fields of a cobordism file; sides absent from the file are None"""
    faces: Complex
    left_faces: Optional[List[int]] = None
    left_boundary: List[int] = field(default_factory=list)
    left_chart: Optional[Dict[int, int]] = None
    right_faces: Optional[List[int]] = None
    right_boundary: List[int] = field(default_factory=list)
    right_chart: Optional[Dict[int, int]] = None
    marks: List[Tuple[int, int]] = field(default_factory=list)


class CobordismParser:
    """Parser for `key = value` cobordism documents"""

    def __init__(self):
        self.patterns = get_patterns('cobordism')

    def parse(self, text: str) -> CobordismDocument:
        stream = TokenStream(text, self.patterns['token'])
        values: Dict[str, Any] = {}
        while stream.peek() is not None:
            key = stream.next()
            if key.kind != 'key':
                raise ParseError(f"expected a key, found {key.value!r}", key.line, key.column)
            if key.value not in COBORDISM_KEYS:
                raise ParseError(f"unknown key {key.value!r}", key.line, key.column)
            if key.value in values:
                raise ParseError(f"duplicate key {key.value!r}", key.line, key.column)
            stream.expect('=')
            if key.value == 'faces':
                values['faces'] = stream.read_lists(what="face")
            elif key.value.endswith('.chart') or key.value == 'marks':
                pairs = stream.read_lists(allow_zero=True, what="pair")
                bad = next((p for p in pairs if len(p) != 2), None)
                if bad is not None:
                    raise ParseError(f"{key.value} entries must be pairs, got {bad}", key.line, key.column)
                values[key.value] = pairs
            else:
                values[key.value] = stream.read_ints(allow_zero=key.value.endswith('.faces'),
                                                     what=key.value)
        if 'faces' not in values:
            raise ParseError("missing key 'faces'")
        try:
            body = Complex(values['faces'])
        except ValidationError as e:
            raise ParseError(str(e)) from e

        def chart(name):
            pairs = values.get(name)
            return None if pairs is None else {k: b for k, b in pairs}

        return CobordismDocument(
            faces=body,
            left_faces=values.get('left.faces'),
            left_boundary=values.get('left.boundary', []),
            left_chart=chart('left.chart'),
            right_faces=values.get('right.faces'),
            right_boundary=values.get('right.boundary', []),
            right_chart=chart('right.chart'),
            marks=[(label, side) for label, side in values.get('marks', [])],
        )

    def parse_file(self, path) -> CobordismDocument:
        path = Path(path)
        try:
            return self.parse(path.read_text())
        except ParseError as e:
            raise ParseError(f"{path}: {e}") from e


class MatchingParser:
    """Parser for edge maps, one `a -> b` per line"""

    def __init__(self):
        self.patterns = get_patterns('matching')

    def parse(self, text: str) -> Dict[int, int]:
        mapping: Dict[int, int] = {}
        for number, line in enumerate(text.splitlines(), start=1):
            if self.patterns['blank'].match(line):
                continue
            match = self.patterns['arrow'].match(line)
            if not match:
                raise ParseError("expected 'label -> label'", number, 1)
            source, image = int(match.group(1)), int(match.group(2))
            if source == 0 or image == 0:
                raise ParseError("zero literal", number, 1)
            if source in mapping:
                raise ParseError(f"label {source} mapped twice", number, 1)
            mapping[source] = image
        return mapping

    def parse_file(self, path) -> Dict[int, int]:
        path = Path(path)
        try:
            return self.parse(path.read_text())
        except ParseError as e:
            raise ParseError(f"{path}: {e}") from e


class OmegaParser:
    """Parser for block sequences such as 3/2,2,2"""

    def __init__(self):
        self.patterns = get_patterns('omega')

    def parse(self, text: str) -> Tuple[str, ...]:
        if not self.patterns['sequence'].match(text):
            raise ParseError(f"expected a comma separated word over {{3/2, 2}}, got {text!r}")
        return tuple(self.patterns['symbol'].findall(text))


def get_parser(kind: str):
    """Get the parser for a document kind"""
    parsers = {
        'complex': ComplexParser,
        'cobordism': CobordismParser,
        'matching': MatchingParser,
        'omega': OmegaParser,
    }
    parser_class = parsers.get(kind.lower())
    if parser_class:
        return parser_class()
    logger.warning(f"No parser available for document kind: {kind}")
    return None


def parse_complex(text: str) -> Complex:
    return ComplexParser().parse(text)
