# ictog/ingest/cache.py
"""
On-disk cache of parsed tables.

Each year is stored as a CSR ``.npz`` plus a JSON sidecar holding the index,
the table meta, the SHA-256 of the source file and the layout it was parsed
with. A cached entry is used only when both still match.
"""

import json
import logging
from pathlib import Path
from typing import Optional, Tuple, Union

import scipy.sparse as sp

from mrio_core.tables import RegionSectorIndex, TableMeta, TransactionTable
from utils.file_utils import ensure_directory, get_file_hash
from .mrio_reader import MrioFileSpec

logger = logging.getLogger(__name__)

_LAYOUT_EXCLUDE = {"path", "year", "chunk_rows", "chunk_cells"}


def layout_fingerprint(spec: MrioFileSpec) -> str:
    return json.dumps(spec.model_dump(mode="json", exclude=_LAYOUT_EXCLUDE), sort_keys=True)


class TableCache:
    """Parsed-table cache rooted at one directory."""

    def __init__(self, cache_dir: Union[str, Path]):
        self.cache_dir = Path(cache_dir)

    def _paths(self, year: int) -> Tuple[Path, Path]:
        return self.cache_dir / f"table_{year}.npz", self.cache_dir / f"table_{year}.json"

    def load(self, spec: MrioFileSpec, year: int, source_hash: Optional[str] = None) -> Optional[TransactionTable]:
        """
        Return the cached table for ``year`` if it was parsed from the same bytes with the same layout.

        Args:
            spec: Spec the caller would parse with
            year: Table year
            source_hash: SHA-256 of ``spec.path`` when already known

        Returns:
            Cached table, or None on a miss
        """
        npz_path, meta_path = self._paths(year)
        if not npz_path.exists() or not meta_path.exists():
            return None

        try:
            with open(meta_path, "r", encoding="utf-8") as f:
                record = json.load(f)
        except (OSError, json.JSONDecodeError) as e:
            logger.warning(f"Ignoring unreadable cache entry {meta_path}: {e}")
            return None

        source_hash = source_hash or get_file_hash(spec.path)
        if record.get("source_sha256") != source_hash or record.get("layout") != layout_fingerprint(spec):
            logger.debug(f"Cache entry for {year} is stale")
            return None

        index = RegionSectorIndex.from_pairs(tuple(pair) for pair in record["index"])
        table = TransactionTable(
            year=record["year"],
            index=index,
            cells=sp.load_npz(npz_path).tocsr(),
            meta=TableMeta(**record["meta"]),
        )
        logger.info(f"Loaded table {year} from cache")
        return table

    def store(self, table: TransactionTable, spec: MrioFileSpec, source_hash: Optional[str] = None) -> Path:
        """
        Write a parsed table to the cache.

        Returns:
            Path of the written ``.npz``
        """
        ensure_directory(self.cache_dir)
        npz_path, meta_path = self._paths(table.year)
        sp.save_npz(npz_path, table.cells, compressed=True)

        record = {
            "year": table.year,
            "index": [list(pair) for pair in table.index],
            "meta": {
                "source": table.meta.source,
                "unit": table.meta.unit,
                "negative_cells": table.meta.negative_cells,
            },
            "source_sha256": source_hash or get_file_hash(spec.path),
            "layout": layout_fingerprint(spec),
        }
        with open(meta_path, "w", encoding="utf-8") as f:
            json.dump(record, f, indent=2, sort_keys=True, ensure_ascii=False)

        logger.debug(f"Cached table {table.year} at {npz_path}")
        return npz_path

    def clear(self) -> int:
        """Delete every cache entry; returns the number of files removed."""
        removed = 0
        if self.cache_dir.exists():
            for path in self.cache_dir.glob("table_*.*"):
                path.unlink()
                removed += 1
        return removed
