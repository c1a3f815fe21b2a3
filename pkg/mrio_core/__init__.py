"""
Core data model for ictog: region-sector indices, transaction tables,
sector groups, exact summation and the shared error hierarchy.
"""

from .tables import (
    RegionCode,
    SectorLabel,
    RegionSectorIndex,
    TableMeta,
    TransactionTable,
)
from .groups import GroupSelector, SectorGroup, GroupResolution, resolve_group
from .summation import exact_sum
from .exceptions import (
    EXIT_OK,
    EXIT_UNEXPECTED,
    EXIT_PARSE,
    EXIT_CONCORDANCE,
    EXIT_NUMERIC,
    EXIT_IO,
    MrioError,
    IngestError,
    MalformedHeader,
    NonNumericCell,
    EmptyFile,
    UndecodableText,
    UnknownRegionSector,
    DuplicateYear,
    NonPositivePrice,
    YearNotFound,
    ConcordanceError,
    SchemaError,
    DuplicateGroup,
    UnmatchedSelector,
    UnknownGroup,
    UnknownTag,
    NumericError,
    ZeroDenominator,
    DimensionMismatch,
    NonConvergence,
    NegativeOutput,
    InvalidSchedule,
    YearOutOfRange,
    InvalidRange,
    TooFewPoints,
    DanglingLink,
)

__all__ = [
    # Types
    "RegionCode",
    "SectorLabel",
    "RegionSectorIndex",
    "TableMeta",
    "TransactionTable",
    "GroupSelector",
    "SectorGroup",
    "GroupResolution",
    "resolve_group",
    "exact_sum",

    # Exit codes
    "EXIT_OK",
    "EXIT_UNEXPECTED",
    "EXIT_PARSE",
    "EXIT_CONCORDANCE",
    "EXIT_NUMERIC",
    "EXIT_IO",

    # Errors
    "MrioError",
    "IngestError",
    "MalformedHeader",
    "NonNumericCell",
    "EmptyFile",
    "UndecodableText",
    "UnknownRegionSector",
    "DuplicateYear",
    "NonPositivePrice",
    "YearNotFound",
    "ConcordanceError",
    "SchemaError",
    "DuplicateGroup",
    "UnmatchedSelector",
    "UnknownGroup",
    "UnknownTag",
    "NumericError",
    "ZeroDenominator",
    "DimensionMismatch",
    "NonConvergence",
    "NegativeOutput",
    "InvalidSchedule",
    "YearOutOfRange",
    "InvalidRange",
    "TooFewPoints",
    "DanglingLink",
]
