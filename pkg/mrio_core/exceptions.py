# ictog/mrio_core/exceptions.py
"""
Error hierarchy shared by every package.

Each family carries the exit code the command-line front end returns for it.
"""

from typing import List, Optional, Sequence

EXIT_OK = 0
EXIT_UNEXPECTED = 1
EXIT_PARSE = 3
EXIT_CONCORDANCE = 4
EXIT_NUMERIC = 5
EXIT_IO = 6


class MrioError(ValueError):
    """Base class for all ictog errors."""

    exit_code = EXIT_UNEXPECTED


# Parsing / ingest

class IngestError(MrioError):
    exit_code = EXIT_PARSE


class MalformedHeader(IngestError):
    """Header rows disagree with the row labels, or a row is ragged."""


class NonNumericCell(IngestError):
    """A matrix cell is not a plain decimal number."""

    def __init__(self, row: int, col: int, value: str, path: Optional[str] = None):
        self.row = row
        self.col = col
        self.value = value
        self.path = path
        where = f" in {path}" if path else ""
        super().__init__(f"Non-numeric cell {value!r} at row {row}, column {col}{where}")


class EmptyFile(IngestError):
    pass


class UndecodableText(IngestError):
    """Bytes of a file are not valid UTF-8."""

    def __init__(self, path: str, line: Optional[int] = None, reason: str = ""):
        self.path = path
        self.line = line
        where = f" near line {line}" if line else ""
        super().__init__(f"{path}: not valid UTF-8{where}: {reason}")


class UnknownRegionSector(IngestError):
    pass


class DuplicateYear(IngestError):
    pass


class NonPositivePrice(IngestError):
    pass


class YearNotFound(IngestError):
    """The year could not be taken from the file name or an explicit flag."""


# Classification / concordance

class ConcordanceError(MrioError):
    exit_code = EXIT_CONCORDANCE


class SchemaError(ConcordanceError):
    """A structured configuration file does not follow its schema."""


class DuplicateGroup(ConcordanceError):
    pass


class UnmatchedSelector(ConcordanceError):
    """A group selector matched no position of an index."""

    def __init__(self, group: str, unmatched: Sequence[str], suggestions: Optional[dict] = None):
        self.group = group
        self.unmatched = list(unmatched)
        self.suggestions = suggestions or {}
        detail = "; ".join(
            f"{label!r}" + (f" (did you mean {self.suggestions[label]!r}?)" if self.suggestions.get(label) else "")
            for label in self.unmatched
        )
        super().__init__(f"Group {group!r}: selectors without match: {detail}")


class UnknownGroup(ConcordanceError):
    def __init__(self, name: str, known: Sequence[str]):
        self.name = name
        self.known = sorted(known)
        super().__init__(f"Unknown group {name!r}; known groups: {', '.join(self.known)}")


class UnknownTag(ConcordanceError):
    def __init__(self, field: str, tag: str, suggestion: Optional[str] = None):
        self.field = field
        self.tag = tag
        self.suggestion = suggestion
        hint = f"; nearest known term: {suggestion!r}" if suggestion else ""
        super().__init__(f"Unknown {field} tag {tag!r}{hint}")


# Numeric

class NumericError(MrioError):
    exit_code = EXIT_NUMERIC


class ZeroDenominator(NumericError):
    pass


class DimensionMismatch(NumericError):
    pass


class NonConvergence(NumericError):
    def __init__(self, message: str, iterations: int = 0, deltas: Optional[List[float]] = None):
        self.iterations = iterations
        self.deltas = deltas or []
        super().__init__(message)


class NegativeOutput(NumericError):
    pass


class InvalidSchedule(NumericError):
    pass


class YearOutOfRange(NumericError):
    pass


class InvalidRange(NumericError):
    pass


# Reporting

class TooFewPoints(NumericError):
    pass


class DanglingLink(NumericError):
    pass
