"""
Ingest package for ictog.

Streaming readers for transaction tables, region-sector vectors and price
series, plus the per-year table-set loader, its cache and a designed
synthetic dataset generator.
"""

from .mrio_reader import MrioFileSpec, parse_mrio, write_mrio, format_cell, SINGLE_REGION
from .vectors import (
    RegionSectorVector,
    PriceSeries,
    parse_region_sector_vector,
    parse_extension,
    parse_price_series,
)
from .cache import TableCache
from .table_set import TableSet, load_table_set
from .synthetic import SyntheticTableGenerator, DEFAULT_YEAR_SCALES

__all__ = [
    "MrioFileSpec",
    "parse_mrio",
    "write_mrio",
    "format_cell",
    "SINGLE_REGION",
    "RegionSectorVector",
    "PriceSeries",
    "parse_region_sector_vector",
    "parse_extension",
    "parse_price_series",
    "TableCache",
    "TableSet",
    "load_table_set",
    "SyntheticTableGenerator",
    "DEFAULT_YEAR_SCALES",
]
