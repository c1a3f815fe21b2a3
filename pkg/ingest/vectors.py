# ictog/ingest/vectors.py
"""
Readers for region-sector keyed vectors (environmental extensions, final
demand, total output) and annual price series.
"""

import logging
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

import numpy as np
import pandas as pd

from mrio_core.exceptions import (
    DuplicateYear,
    MalformedHeader,
    NonNumericCell,
    NonPositivePrice,
    UndecodableText,
    UnknownRegionSector,
)
from mrio_core.tables import RegionSectorIndex

logger = logging.getLogger(__name__)

VECTOR_COLUMNS = ("region", "sector", "value")
PRICE_COLUMNS = ("year", "price")


@dataclass(frozen=True)
class RegionSectorVector:
    """Dense vector aligned to an index, with the entries the file did not cover."""

    values: np.ndarray
    missing: int = 0
    unknown_rows: Tuple[Tuple[str, str], ...] = ()
    source: str = ""

    def __len__(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class PriceSeries:
    """Annual prices (currency units per barrel), years strictly increasing."""

    name: str
    points: Dict[int, float] = field(default_factory=dict)

    def __post_init__(self):
        for year, price in self.points.items():
            if not math.isfinite(price) or price <= 0:
                raise NonPositivePrice(f"{self.name}: price {price} for {year} must be finite and > 0")
        object.__setattr__(self, "points", dict(sorted(self.points.items())))

    @property
    def years(self) -> List[int]:
        return list(self.points)

    def get(self, year: int) -> Optional[float]:
        return self.points.get(year)

    def __len__(self) -> int:
        return len(self.points)


def _read_table(path: Path, columns: Tuple[str, ...]) -> pd.DataFrame:
    if path.stat().st_size == 0:
        return pd.DataFrame(columns=list(columns))
    try:
        frame = pd.read_csv(path, dtype=str, keep_default_na=False, skipinitialspace=True, encoding="utf-8")
    except pd.errors.EmptyDataError:
        return pd.DataFrame(columns=list(columns))
    except pd.errors.ParserError as e:
        raise MalformedHeader(f"{path}: {e}") from e
    except UnicodeDecodeError as e:
        raise UndecodableText(str(path), reason=str(e)) from e

    frame.columns = [str(c).strip().lower() for c in frame.columns]
    missing = [c for c in columns if c not in frame.columns]
    if missing:
        raise MalformedHeader(f"{path}: missing column(s) {', '.join(missing)}; expected {','.join(columns)}")
    return frame


def _to_float(text: str, row: int, col: int, path: Path) -> float:
    try:
        value = float(text)
    except ValueError:
        raise NonNumericCell(row=row, col=col, value=text, path=str(path)) from None
    if not math.isfinite(value):
        raise NonNumericCell(row=row, col=col, value=text, path=str(path))
    return value


def parse_region_sector_vector(
    path: Union[str, Path],
    index: RegionSectorIndex,
    strict: bool = True,
) -> RegionSectorVector:
    """
    Read a ``region,sector,value`` CSV into a vector aligned to ``index``.

    Entries the file does not mention are 0 and counted in ``missing``.

    Raises:
        UnknownRegionSector: a row names a pair absent from the index (strict mode)
        MalformedHeader: missing columns or a pair listed twice
        NonNumericCell: a value is not a finite number
    """
    path = Path(path)
    frame = _read_table(path, VECTOR_COLUMNS)
    values = np.zeros(len(index), dtype=np.float64)
    seen = np.zeros(len(index), dtype=bool)
    unknown: List[Tuple[str, str]] = []
    value_col = list(frame.columns).index("value") + 1

    for line, (region, sector, text) in enumerate(
        zip(frame["region"], frame["sector"], frame["value"]), start=2
    ):
        position = index.get(region, sector)
        if position is None:
            if strict:
                raise UnknownRegionSector(f"{path}:{line}: ({region!r}, {sector!r}) is not in the table index")
            unknown.append((region, sector))
            continue
        if seen[position]:
            raise MalformedHeader(f"{path}:{line}: ({region!r}, {sector!r}) listed twice")
        values[position] = _to_float(text, line, value_col, path)
        seen[position] = True

    missing = int((~seen).sum())
    if missing:
        logger.warning(f"{path.name}: {missing} of {len(index)} region-sectors missing, set to 0")
    if unknown:
        logger.warning(f"{path.name}: skipped {len(unknown)} rows outside the table index")

    return RegionSectorVector(values=values, missing=missing, unknown_rows=tuple(unknown), source=str(path))


def parse_extension(
    path: Union[str, Path],
    index: RegionSectorIndex,
    strict: bool = True,
) -> RegionSectorVector:
    """
    Read a direct-intensity extension (kgCO2e per M€) aligned to ``index``.

    Args:
        path: ``region,sector,value`` CSV
        index: Index of the table the intensities belong to
        strict: Reject rows for pairs outside the index

    Returns:
        Intensity vector with the count of entries defaulted to 0
    """
    vector = parse_region_sector_vector(path, index, strict=strict)
    negatives = int((vector.values < 0).sum())
    if negatives:
        logger.warning(f"{Path(path).name}: {negatives} negative intensities")
    return vector


def parse_price_series(path: Union[str, Path], name: Optional[str] = None) -> PriceSeries:
    """
    Read a ``year,price`` CSV.

    Args:
        path: Price file
        name: Series name (defaults to the file stem, e.g. ``brent``)

    Returns:
        PriceSeries sorted by year

    Raises:
        DuplicateYear: a year appears twice
        NonPositivePrice: a price is zero, negative or not finite
    """
    path = Path(path)
    frame = _read_table(path, PRICE_COLUMNS)
    points: Dict[int, float] = {}

    for line, (year_text, price_text) in enumerate(zip(frame["year"], frame["price"]), start=2):
        try:
            year = int(year_text)
        except ValueError:
            raise NonNumericCell(row=line, col=1, value=year_text, path=str(path)) from None
        try:
            price = float(price_text)
        except ValueError:
            raise NonNumericCell(row=line, col=2, value=price_text, path=str(path)) from None
        if year in points:
            raise DuplicateYear(f"{path}:{line}: year {year} listed twice")
        if not math.isfinite(price) or price <= 0:
            raise NonPositivePrice(f"{path}:{line}: price {price_text} for {year} must be finite and > 0")
        points[year] = price

    series = PriceSeries(name=name or path.stem, points=points)
    logger.info(f"Read {len(series)} prices for {series.name}")
    return series
