from __future__ import annotations

from pathlib import Path
from typing import Optional


class HitsVocabError(Exception):
    """Base class for every error raised by the toolkit."""

    exit_code = 1


class UndefinedPmiError(HitsVocabError, ValueError):
    pass


class DegenerateMatrixError(HitsVocabError):
    pass


class NumericalDegeneracyError(HitsVocabError, ArithmeticError):
    pass


class ShapeMismatchError(HitsVocabError, ValueError):
    pass


class CapacityError(HitsVocabError, ValueError):
    pass


class ConsistencyError(HitsVocabError):
    pass


class InputFormatError(HitsVocabError):
    """A file could be read but its contents are not in the expected format."""

    exit_code = 2

    def __init__(self, message: str, path: Optional[Path] = None, line: Optional[int] = None) -> None:
        self.path = path
        self.line = line
        location = ""
        if path is not None:
            location = f"{path}:{line}: " if line is not None else f"{path}: "
        elif line is not None:
            location = f"line {line}: "
        super().__init__(f"{location}{message}")


class CorpusFormatError(InputFormatError):
    pass


class TaggedCorpusError(InputFormatError):
    pass


class ScoreFileError(InputFormatError):
    pass


__all__ = [
    "CapacityError",
    "ConsistencyError",
    "CorpusFormatError",
    "DegenerateMatrixError",
    "HitsVocabError",
    "InputFormatError",
    "NumericalDegeneracyError",
    "ScoreFileError",
    "ShapeMismatchError",
    "TaggedCorpusError",
    "UndefinedPmiError",
]
