"""
Exception hierarchy for TrustProp.

Validation problems are ValueError subclasses so callers that only know about
ValueError still catch them.
"""

from typing import Optional


class TrustPropError(Exception):
    """Base class for all TrustProp errors."""


class ValidationError(TrustPropError, ValueError):
    """An input or structure violates a documented invariant."""


class CorruptIndexError(ValidationError):
    """A PathIndex entry does not describe a valid path in its source graph."""


class DatasetFormatError(ValidationError):
    """A dataset file could not be parsed."""

    def __init__(self, message: str, path: Optional[str] = None,
                 line: Optional[int] = None):
        self.path = path
        self.line = line
        location = ""
        if path is not None:
            location = f"{path}"
            if line is not None:
                location += f":{line}"
            location += ": "
        super().__init__(f"{location}{message}")


class EmptyDatasetError(ValidationError):
    """Filtering removed every user, item or rating."""


class UnknownNodeError(TrustPropError, KeyError):
    """A node, user or item id is not part of the structure."""

    def __str__(self) -> str:
        return str(self.args[0]) if self.args else "unknown id"


class SweepAbortedError(TrustPropError, RuntimeError):
    """A sweep stopped early; partial reports were flushed before raising."""
