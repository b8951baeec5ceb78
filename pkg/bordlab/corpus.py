"""
Shipped Complexes
Loads V₂³, X′, X″ and W₁₅/₈ from the data directory
"""
from pathlib import Path
from typing import List, Tuple
import logging

from .complex import Complex, SignedEdge
from .config import config
from .errors import ValidationError
from .parsers import ComplexParser

logger = logging.getLogger(__name__)

CORPUS_NAMES = ('v23', 'xprime', 'xpp', 'w158')

# Face entries of X′ rewritten to obtain X″: (face index, position, new entry)
FAKE_FLIP: List[Tuple[int, int, SignedEdge]] = [
    (0, 1, SignedEdge(2, -1)),
    (1, 0, SignedEdge(11, -1)),
]

# Undoes FAKE_FLIP on X″ (positions refer to X″'s stored words)
FAKE_UNFLIP: List[Tuple[int, int, SignedEdge]] = [
    (0, 1, SignedEdge(11, 1)),
    (1, 1, SignedEdge(2, 1)),
]

_cache = {}


def data_directory() -> Path:
    directory = config.get('data', 'directory')
    if directory:
        return Path(directory)
    return Path(__file__).parent / 'data'


def corpus_path(name: str) -> Path:
    return data_directory() / f"{name}.cplx"


def load_complex(name: str) -> Complex:
    """Shipped complex by name (v23, xprime, xpp, w158)"""
    if name not in CORPUS_NAMES:
        raise ValidationError(f"unknown corpus complex {name!r}; known: {', '.join(CORPUS_NAMES)}")
    path = corpus_path(name)
    if path not in _cache:
        logger.debug(f"Loading {name} from {path}")
        _cache[path] = ComplexParser().parse_file(path)
    return _cache[path]


def load_all() -> dict:
    return {name: load_complex(name) for name in CORPUS_NAMES}
