# ictog/ingest/mrio_reader.py
"""
Streaming reader and writer for delimited MRIO transaction tables.

The default layout mirrors the EXIOBASE3 industry-by-industry transaction
file: a region header row, a sector header row, a region label column and a
sector label column, tab-delimited. The matrix body is read in chunks of
rows sized by a cell budget, so peak memory stays at one chunk plus the
nonzeros collected so far however wide the table is.
"""

import logging
from pathlib import Path
from typing import List, Optional, Tuple, Union

import numpy as np
import pandas as pd
import scipy.sparse as sp
from pydantic import BaseModel, Field, field_validator, model_validator

from config.app_config import IngestConfig, get_config
from mrio_core.exceptions import (
    EmptyFile,
    MalformedHeader,
    NonNumericCell,
    UndecodableText,
    YearNotFound,
)
from mrio_core.tables import RegionSectorIndex, TableMeta, TransactionTable
from utils.file_utils import ensure_directory, year_from_filename
from utils.logging_utils import create_context_logger
from utils.text_utils import normalize_label

logger = logging.getLogger(__name__)

SINGLE_REGION = "ALL"

_DECIMAL_POINT = r"[+-]?(?:\d+(?:\.\d*)?|\.\d+)"
_DECIMAL_COMMA = r"[+-]?(?:\d+(?:,\d*)?|,\d+)"


class MrioFileSpec(BaseModel):
    """Location and layout of one transaction-table file."""

    path: Path
    delimiter: str = "\t"
    header_rows: int = Field(2, ge=1)
    region_row: int = Field(0, ge=0)
    sector_row: int = Field(1, ge=0)
    label_cols: int = Field(2, ge=1)
    unit: str = "M€"
    decimal_comma: bool = False
    year: Optional[int] = None
    file_pattern: str = "IOT_{year}_ixi.txt"
    chunk_rows: int = Field(2000, ge=1)
    chunk_cells: int = Field(1_000_000, ge=1)

    @field_validator("delimiter")
    @classmethod
    def _single_char(cls, value: str) -> str:
        if len(value) != 1:
            raise ValueError("delimiter must be a single character")
        return value

    @model_validator(mode="after")
    def _check_layout(self) -> "MrioFileSpec":
        if self.sector_row >= self.header_rows:
            raise ValueError(f"sector_row {self.sector_row} outside {self.header_rows} header rows")
        if self.header_rows > 1 and self.region_row >= self.header_rows:
            raise ValueError(f"region_row {self.region_row} outside {self.header_rows} header rows")
        if self.decimal_comma and self.delimiter == ",":
            raise ValueError("decimal_comma requires a delimiter other than ','")
        return self

    @classmethod
    def from_config(cls, path: Union[str, Path], config: Optional[IngestConfig] = None, **overrides) -> "MrioFileSpec":
        """Build a spec from the ingest configuration, with per-call overrides."""
        config = config or get_config().ingest
        values = dict(
            path=Path(path),
            delimiter=config.delimiter,
            header_rows=config.header_rows,
            region_row=config.region_row,
            sector_row=config.sector_row,
            label_cols=config.label_cols,
            unit=config.unit,
            decimal_comma=config.decimal_comma,
            file_pattern=config.file_pattern,
            chunk_rows=config.chunk_rows,
            chunk_cells=config.chunk_cells,
        )
        values.update(overrides)
        return cls(**values)

    @property
    def single_region(self) -> bool:
        return self.header_rows == 1 or self.label_cols == 1

    def with_path(self, path: Union[str, Path], year: Optional[int] = None) -> "MrioFileSpec":
        return self.model_copy(update={"path": Path(path), "year": year})

    def rows_per_chunk(self, width: int) -> int:
        """Body rows per chunk for a file with ``width`` fields per line."""
        return max(1, min(self.chunk_rows, self.chunk_cells // max(width, 1)))

    def resolve_year(self) -> int:
        """Year from the explicit field, else from the file-name pattern."""
        if self.year is not None:
            return self.year
        year = year_from_filename(self.path.name, self.file_pattern)
        if year is None:
            raise YearNotFound(
                f"Cannot take a year from {self.path.name!r} with pattern {self.file_pattern!r}; pass the year explicitly"
            )
        return year


def _read_options(spec: MrioFileSpec) -> dict:
    return dict(
        sep=spec.delimiter,
        header=None,
        dtype=str,
        keep_default_na=False,
        na_filter=True,
        skip_blank_lines=True,
        encoding="utf-8",
        engine="c",
    )


def _read_header(spec: MrioFileSpec) -> RegionSectorIndex:
    try:
        header = pd.read_csv(spec.path, nrows=spec.header_rows, **_read_options(spec))
    except pd.errors.EmptyDataError as e:
        raise EmptyFile(f"{spec.path} is empty") from e
    except pd.errors.ParserError as e:
        raise MalformedHeader(f"{spec.path}: unreadable header: {e}") from e
    except UnicodeDecodeError as e:
        raise UndecodableText(str(spec.path), reason=str(e)) from e

    if len(header) < spec.header_rows:
        raise MalformedHeader(f"{spec.path}: expected {spec.header_rows} header rows, found {len(header)}")

    sectors = header.iloc[spec.sector_row, spec.label_cols:]
    if spec.single_region:
        regions = pd.Series([SINGLE_REGION] * len(sectors))
    else:
        regions = header.iloc[spec.region_row, spec.label_cols:]

    if len(sectors) == 0 or sectors.isna().any() or regions.isna().any():
        raise MalformedHeader(f"{spec.path}: header rows have missing or no column labels")

    return RegionSectorIndex.from_pairs(zip(regions.tolist(), sectors.tolist()))


def _row_labels(chunk: pd.DataFrame, spec: MrioFileSpec) -> List[Tuple[str, str]]:
    if spec.label_cols == 1 or spec.single_region:
        sectors = chunk.iloc[:, spec.label_cols - 1].tolist()
        return [(SINGLE_REGION, s) for s in sectors]
    return list(zip(chunk.iloc[:, 0].tolist(), chunk.iloc[:, 1].tolist()))


def parse_mrio(spec: MrioFileSpec) -> TransactionTable:
    """
    Parse a transaction-table file into a sparse TransactionTable.

    Args:
        spec: File location and layout

    Returns:
        Table whose index follows the file header; zeros are not stored

    Raises:
        EmptyFile: the file holds no bytes or no header
        MalformedHeader: row labels differ from the column header, or rows are ragged
        NonNumericCell: a cell is not a plain decimal number (1-based line and column)
        UndecodableText: the file is not valid UTF-8
        YearNotFound: no explicit year and the file name does not match the pattern
    """
    path = Path(spec.path)
    if path.stat().st_size == 0:
        raise EmptyFile(f"{path} is empty")

    year = spec.resolve_year()
    log = create_context_logger(__name__, year=year, file=path.name)

    index = _read_header(spec)
    n = len(index)
    width = spec.label_cols + n
    cell_pattern = _DECIMAL_COMMA if spec.decimal_comma else _DECIMAL_POINT

    rows: List[np.ndarray] = []
    cols: List[np.ndarray] = []
    data: List[np.ndarray] = []
    negative_cells = 0
    row_offset = 0

    try:
        reader = pd.read_csv(
            path, skiprows=spec.header_rows, chunksize=spec.rows_per_chunk(width), **_read_options(spec)
        )
    except pd.errors.EmptyDataError as e:
        raise MalformedHeader(f"{path}: header without matrix rows") from e
    except pd.errors.ParserError as e:
        raise MalformedHeader(f"{path}: ragged rows: {e}") from e
    except UnicodeDecodeError as e:
        raise UndecodableText(str(path), line=spec.header_rows + 1, reason=str(e)) from e

    try:
        for chunk in reader:
            if chunk.shape[1] != width or chunk.isna().to_numpy().any():
                raise MalformedHeader(
                    f"{path}: ragged rows near line {spec.header_rows + row_offset + 1}; expected {width} fields"
                )
            if row_offset + len(chunk) > n:
                raise MalformedHeader(f"{path}: more matrix rows than the {n} header columns")

            for k, label in enumerate(_row_labels(chunk, spec)):
                expected = index[row_offset + k]
                if (normalize_label(label[0]), normalize_label(label[1])) != expected:
                    raise MalformedHeader(
                        f"{path}: row {row_offset + k} is labelled {label!r} but the column header has {expected!r}"
                    )

            cells = chunk.iloc[:, spec.label_cols:].to_numpy(dtype=object).ravel()
            text = pd.Series(cells, dtype=str).str.strip()
            valid = text.str.fullmatch(cell_pattern).to_numpy(dtype=bool)
            if not valid.all():
                bad = int(np.flatnonzero(~valid)[0])
                raise NonNumericCell(
                    row=spec.header_rows + row_offset + bad // n + 1,
                    col=spec.label_cols + bad % n + 1,
                    value=str(cells[bad]),
                    path=str(path),
                )
            if spec.decimal_comma:
                text = text.str.replace(",", ".", regex=False)
            values = text.astype(np.float64).to_numpy().reshape(len(chunk), n)

            r, c = np.nonzero(values)
            rows.append(r + row_offset)
            cols.append(c)
            data.append(values[r, c])
            negative_cells += int((values < 0).sum())
            row_offset += len(chunk)
    except pd.errors.ParserError as e:
        raise MalformedHeader(f"{path}: ragged rows: {e}") from e
    except UnicodeDecodeError as e:
        raise UndecodableText(str(path), line=spec.header_rows + row_offset + 1, reason=str(e)) from e
    finally:
        reader.close()

    if row_offset != n:
        raise MalformedHeader(f"{path}: {row_offset} matrix rows for {n} header columns")

    if data:
        matrix = sp.coo_matrix(
            (np.concatenate(data), (np.concatenate(rows), np.concatenate(cols))), shape=(n, n)
        ).tocsr()
    else:
        matrix = sp.csr_matrix((n, n), dtype=np.float64)

    if negative_cells:
        log.warning(f"{negative_cells} negative cells kept as-is")
    log.info(f"Parsed {n}x{n} table with {matrix.nnz} nonzeros")

    return TransactionTable(
        year=year,
        index=index,
        cells=matrix,
        meta=TableMeta(source=str(path), unit=spec.unit, negative_cells=negative_cells),
    )


def format_cell(value: float, decimal_comma: bool = False) -> str:
    """Shortest plain-decimal text that parses back to the same float."""
    text = np.format_float_positional(float(value), trim="-")
    return text.replace(".", ",") if decimal_comma else text


def write_mrio(table: TransactionTable, spec: MrioFileSpec) -> Path:
    """
    Write a table in the layout described by ``spec``.

    Args:
        table: Table to write
        spec: Target path and layout

    Returns:
        Path of the written file
    """
    path = Path(spec.path)
    ensure_directory(path.parent)
    d = spec.delimiter
    corner = [""] * spec.label_cols
    regions = [region for region, _ in table.index]
    sectors = [sector for _, sector in table.index]

    with open(path, "w", encoding="utf-8", newline="\n") as f:
        for r in range(spec.header_rows):
            if r == spec.sector_row:
                labels = sectors
            elif r == spec.region_row and not spec.single_region:
                labels = regions
            else:
                labels = [""] * len(table.index)
            f.write(d.join(corner + labels) + "\n")

        for i, (region, sector) in enumerate(table.index):
            if spec.single_region:
                labels = [""] * (spec.label_cols - 1) + [sector]
            else:
                labels = [region, sector] + [""] * (spec.label_cols - 2)
            row = table.cells.getrow(i).toarray().ravel()
            f.write(d.join(labels + [format_cell(v, spec.decimal_comma) for v in row]) + "\n")

    logger.info(f"Wrote table {table.year} to {path}")
    return path
