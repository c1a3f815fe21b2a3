# ictog/mrio_core/tables.py
"""
In-memory model of one year's multi-regional transaction table.

Rows are producing region-sectors, columns consuming region-sectors; both
share one ``RegionSectorIndex``. Cells are kept in a CSR matrix in the
table's unit (millions of euros for EXIOBASE-style data).
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, Iterable, Iterator, List, NewType, Optional, Tuple

import numpy as np
import scipy.sparse as sp

from utils.text_utils import normalize_label
from .exceptions import DimensionMismatch, MalformedHeader, NumericError

logger = logging.getLogger(__name__)

RegionCode = NewType("RegionCode", str)
SectorLabel = NewType("SectorLabel", str)
RegionSector = Tuple[RegionCode, SectorLabel]


@dataclass(frozen=True)
class RegionSectorIndex:
    """Ordered (region, sector) pairs with a pair -> position lookup."""

    entries: Tuple[RegionSector, ...]
    _lookup: Dict[RegionSector, int] = field(init=False, repr=False, compare=False)
    _by_sector: Dict[str, Tuple[int, ...]] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        entries = tuple(
            (RegionCode(normalize_label(region)), SectorLabel(normalize_label(sector)))
            for region, sector in self.entries
        )
        object.__setattr__(self, "entries", entries)
        lookup: Dict[RegionSector, int] = {}
        by_sector: Dict[str, List[int]] = {}
        for position, (region, sector) in enumerate(entries):
            if not region or not sector:
                raise MalformedHeader(f"Empty region or sector label at position {position}")
            if (region, sector) in lookup:
                raise MalformedHeader(f"Duplicate index entry {(region, sector)!r} at position {position}")
            lookup[(region, sector)] = position
            by_sector.setdefault(sector, []).append(position)
        object.__setattr__(self, "_lookup", lookup)
        object.__setattr__(self, "_by_sector", {k: tuple(v) for k, v in by_sector.items()})

    @classmethod
    def from_pairs(cls, pairs: Iterable[Tuple[str, str]]) -> "RegionSectorIndex":
        return cls(tuple((region, sector) for region, sector in pairs))

    @classmethod
    def product(cls, regions: Iterable[str], sectors: Iterable[str]) -> "RegionSectorIndex":
        """Region-major index: every sector for the first region, then the next."""
        sectors = list(sectors)
        return cls.from_pairs((region, sector) for region in regions for sector in sectors)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[RegionSector]:
        return iter(self.entries)

    def __getitem__(self, position: int) -> RegionSector:
        return self.entries[position]

    def position(self, region: str, sector: str) -> int:
        """Ordinal position of a pair; raises KeyError when absent."""
        return self._lookup[(normalize_label(region), normalize_label(sector))]

    def get(self, region: str, sector: str) -> Optional[int]:
        return self._lookup.get((normalize_label(region), normalize_label(sector)))

    def positions_for_sector(self, sector: str) -> Tuple[int, ...]:
        return self._by_sector.get(normalize_label(sector), ())

    @property
    def regions(self) -> Tuple[RegionCode, ...]:
        """Distinct regions in first-appearance order."""
        return tuple(dict.fromkeys(region for region, _ in self.entries))

    @property
    def sectors(self) -> Tuple[SectorLabel, ...]:
        """Distinct sector labels in first-appearance order."""
        return tuple(dict.fromkeys(sector for _, sector in self.entries))

    def permuted(self, order: Iterable[int]) -> "RegionSectorIndex":
        return RegionSectorIndex(tuple(self.entries[p] for p in order))


@dataclass(frozen=True)
class TableMeta:
    """Provenance and parse statistics of a table."""

    source: str = ""
    unit: str = "M€"
    negative_cells: int = 0

    @property
    def has_negatives(self) -> bool:
        return self.negative_cells > 0


@dataclass(frozen=True)
class TransactionTable:
    """One year's transaction matrix Z; treat as read-only after construction."""

    year: int
    index: RegionSectorIndex
    cells: sp.csr_matrix
    meta: TableMeta = field(default_factory=TableMeta)

    def __post_init__(self):
        n = len(self.index)
        if self.cells.shape != (n, n):
            raise DimensionMismatch(
                f"Matrix shape {self.cells.shape} does not match index length {n}"
            )
        cells = sp.csr_matrix(self.cells, dtype=np.float64)
        cells.eliminate_zeros()
        cells.sort_indices()
        if not np.all(np.isfinite(cells.data)):
            raise NumericError(f"Table {self.year} holds non-finite cells")
        object.__setattr__(self, "cells", cells)

    @classmethod
    def from_dense(
        cls,
        year: int,
        index: RegionSectorIndex,
        matrix,
        source: str = "in-memory",
        unit: str = "M€",
    ) -> "TransactionTable":
        dense = np.asarray(matrix, dtype=float)
        return cls(
            year=year,
            index=index,
            cells=sp.csr_matrix(dense),
            meta=TableMeta(source=source, unit=unit, negative_cells=int((dense < 0).sum())),
        )

    @property
    def nnz(self) -> int:
        return int(self.cells.nnz)

    @property
    def shape(self) -> Tuple[int, int]:
        return self.cells.shape

    def to_dense(self) -> np.ndarray:
        return self.cells.toarray()

    def permuted(self, order: Iterable[int]) -> "TransactionTable":
        """Same table with rows and columns reordered consistently."""
        order = np.asarray(list(order), dtype=int)
        return TransactionTable(
            year=self.year,
            index=self.index.permuted(order),
            cells=self.cells[order][:, order],
            meta=self.meta,
        )

    def summary(self) -> Dict[str, object]:
        return {
            "year": self.year,
            "dimension": len(self.index),
            "regions": len(self.index.regions),
            "sectors": len(self.index.sectors),
            "nonzeros": self.nnz,
            "negative_cells": self.meta.negative_cells,
            "unit": self.meta.unit,
            "source": self.meta.source,
        }
