# ictog/report/csv_io.py
"""
CSV output with a declared column schema.

Floats are written in their shortest round-trip positional form, so reading
a file back reproduces the written values bit for bit. ``None`` becomes an
empty field.
"""

import csv
import logging
from pathlib import Path
from typing import Any, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from ingest.mrio_reader import format_cell
from utils.file_utils import ensure_directory

logger = logging.getLogger(__name__)

ColumnType = Union[type, str]
Schema = Sequence[Tuple[str, ColumnType]]

_TYPES = {"str": str, "int": int, "float": float}

FLOW_SCHEMA: Schema = (("year", int), ("from", str), ("to", str), ("value", float), ("share", float))
FOOTPRINT_SCHEMA: Schema = (("region", str), ("sector", str), ("kgco2e", float))
CONTRIBUTOR_SCHEMA: Schema = (("rank", int), ("year", int), ("region", str), ("value", float))
OVERLAY_SCHEMA: Schema = (("year", int), ("flow", float), ("share", float), ("price", float))


def _column_type(kind: ColumnType) -> type:
    if isinstance(kind, str):
        try:
            return _TYPES[kind]
        except KeyError:
            raise ValueError(f"Unknown column type {kind!r}; use one of {', '.join(_TYPES)}") from None
    return kind


def _format(value: Any, kind: type) -> str:
    if value is None:
        return ""
    if kind is float:
        return format_cell(float(value))
    if kind is int:
        return str(int(value))
    return str(value)


def _parse(text: str, kind: type) -> Any:
    if text == "":
        return None
    return kind(text)


def write_csv(rows: Iterable[Mapping[str, Any]], schema: Schema, path: Union[str, Path]) -> Path:
    """
    Write rows as CSV with a header row.

    Args:
        rows: Mappings holding at least the schema's columns
        schema: (column, type) pairs; type is ``str``, ``int`` or ``float``
        path: Output file

    Returns:
        Path of the written file

    Raises:
        KeyError: a row lacks a schema column
        OSError: the file cannot be written
    """
    path = Path(path)
    ensure_directory(path.parent)
    columns = [(name, _column_type(kind)) for name, kind in schema]

    count = 0
    with open(path, "w", encoding="utf-8", newline="") as f:
        writer = csv.writer(f)
        writer.writerow([name for name, _ in columns])
        for row in rows:
            writer.writerow([_format(row[name], kind) for name, kind in columns])
            count += 1

    logger.info(f"Wrote {count} rows to {path}")
    return path


def read_csv(path: Union[str, Path], schema: Optional[Schema] = None) -> List[Dict[str, Any]]:
    """
    Read a CSV written by ``write_csv``.

    Columns listed in ``schema`` are converted to their type; other columns
    stay text. Empty fields read as None.
    """
    types = {name: _column_type(kind) for name, kind in (schema or ())}
    with open(path, "r", encoding="utf-8", newline="") as f:
        return [
            {name: _parse(text, types.get(name, str)) for name, text in record.items()}
            for record in csv.DictReader(f)
        ]
