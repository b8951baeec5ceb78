"""
Exception Types
Everything the library raises derives from BordlabError so the CLI can map it to exit code 1
"""
from typing import Optional


class BordlabError(Exception):
    """Base class for toolkit errors"""


class ParseError(BordlabError):
    """Malformed input document, with the 1-based position of the problem"""

    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"line {line}, column {column}: {message}"
        super().__init__(message)


class ValidationError(BordlabError):
    """An argument violates an operation's precondition"""


class CompositionError(BordlabError):
    """Cobordisms or collars cannot be glued as requested"""


class SearchError(BordlabError):
    """A search produced an object that failed its own validation"""


class UsageError(BordlabError):
    """Bad command line"""
