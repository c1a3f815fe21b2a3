"""
Concordance package for ictog: sector-group files and their coverage checks.
"""

from .loader import (
    DEFAULT_CONCORDANCE_PATH,
    GroupEntry,
    ConcordanceFile,
    ConcordanceConfig,
    parse_concordance,
    load_concordance,
    write_concordance,
)
from .coverage import CoverageReport, validate_against

__all__ = [
    "DEFAULT_CONCORDANCE_PATH",
    "GroupEntry",
    "ConcordanceFile",
    "ConcordanceConfig",
    "parse_concordance",
    "load_concordance",
    "write_concordance",
    "CoverageReport",
    "validate_against",
]
