"""
Text Format Definitions for bordlab

This module centralizes the regular expressions used to read complexes,
cobordism documents, edge matchings and ω sequences.

Patterns are pre-compiled at module load time.
"""
import re

# =============================================================================
# COMPLEX PATTERNS
# =============================================================================
COMPLEX_PATTERNS = {
    # One lexical token of the bracket notation, or skippable text.
    # Groups: (1) whitespace, (2) comment, (3) bracket or comma, (4) integer
    'token': r'(\s+)|(#[^\n]*)|([\[\],])|(-?\d+)',
}

# =============================================================================
# COBORDISM DOCUMENT PATTERNS
# =============================================================================
COBORDISM_PATTERNS = {
    # Same lexical tokens as complexes plus keys and "="
    # Groups: (1) whitespace, (2) comment, (3) bracket, comma or "=", (4) integer, (5) key
    'token': r'(\s+)|(#[^\n]*)|([\[\],=])|(-?\d+)|([a-z]+(?:\.[a-z]+)?)',
}

COBORDISM_KEYS = (
    'faces', 'marks',
    'left.faces', 'left.boundary', 'left.chart',
    'right.faces', 'right.boundary', 'right.chart',
)

# =============================================================================
# MATCHING PATTERNS
# =============================================================================
MATCHING_PATTERNS = {
    # Matches: "11 -> 1" or "3 -> -14"
    # Groups: (1) source label, (2) signed image
    'arrow': r'^\s*(\d+)\s*->\s*(-?\d+)\s*(?:#.*)?$',
    'blank': r'^\s*(#.*)?$',
}

# =============================================================================
# OMEGA PATTERNS
# =============================================================================
OMEGA_PATTERNS = {
    # Matches: "3/2,2,2" (block symbols separated by commas)
    'sequence': r'^\s*(?:3/2|2)(?:\s*,\s*(?:3/2|2))*\s*$',
    'symbol': r'3/2|2',
}


def _compile_patterns(pattern_dict):
    """Pre-compile all regex patterns in a dictionary"""
    return {key: re.compile(pattern) for key, pattern in pattern_dict.items()}


_COMPILED_PATTERNS = {
    'complex': _compile_patterns(COMPLEX_PATTERNS),
    'cobordism': _compile_patterns(COBORDISM_PATTERNS),
    'matching': _compile_patterns(MATCHING_PATTERNS),
    'omega': _compile_patterns(OMEGA_PATTERNS),
}


def get_patterns(kind: str) -> dict:
    """
    Get pre-compiled regex patterns for a document kind.

    Args:
        kind: complex, cobordism, matching or omega

    Returns:
        Dictionary of pattern_name -> compiled regex pattern object
    """
    return _COMPILED_PATTERNS.get(kind.lower(), {})
