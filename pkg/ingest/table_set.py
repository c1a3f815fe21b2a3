# ictog/ingest/table_set.py
"""
Concurrent loading of one transaction table per year from a directory.
"""

import logging
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Tuple, Union

from tqdm import tqdm

from config.app_config import get_config
from mrio_core.exceptions import EmptyFile, MrioError, YearNotFound
from mrio_core.tables import TransactionTable
from utils.file_utils import get_file_hash, list_files_by_year
from .cache import TableCache
from .mrio_reader import MrioFileSpec, parse_mrio

logger = logging.getLogger(__name__)


@dataclass
class TableSet:
    """Tables parsed from a directory, with per-year failures."""

    tables: List[TransactionTable] = field(default_factory=list)
    errors: Dict[int, Exception] = field(default_factory=dict)
    files: Dict[int, Path] = field(default_factory=dict)
    cached: List[int] = field(default_factory=list)

    @property
    def years(self) -> List[int]:
        return [table.year for table in self.tables]

    @property
    def ok(self) -> bool:
        return not self.errors


def _load_one(spec: MrioFileSpec, cache: Optional[TableCache]) -> Tuple[TransactionTable, bool]:
    source_hash = get_file_hash(spec.path) if cache is not None else None
    if cache is not None:
        table = cache.load(spec, spec.year, source_hash)
        if table is not None:
            return table, True
    table = parse_mrio(spec)
    if cache is not None:
        cache.store(table, spec, source_hash)
    return table, False


def load_table_set(
    directory: Union[str, Path],
    spec: Optional[MrioFileSpec] = None,
    years: Optional[Iterable[int]] = None,
    max_workers: Optional[int] = None,
    cache: Optional[TableCache] = None,
    show_progress: bool = False,
) -> TableSet:
    """
    Parse every per-year file of a directory.

    A failing file does not stop the others; its exception is kept in
    ``TableSet.errors`` under its year.

    Args:
        directory: Directory holding one file per year
        spec: Layout template; its path is replaced per file
        years: Restrict to these years (missing ones are reported as errors)
        max_workers: Concurrent parse jobs (defaults to the ingest configuration)
        cache: Optional parsed-table cache
        show_progress: Show a tqdm progress bar

    Returns:
        TableSet with tables sorted by year

    Raises:
        FileNotFoundError: the directory does not exist
        EmptyFile: no file matches the pattern
    """
    directory = Path(directory)
    if not directory.is_dir():
        raise FileNotFoundError(f"Dataset directory {directory} does not exist")

    spec = spec or MrioFileSpec.from_config(directory)
    max_workers = max_workers or get_config().ingest.max_workers

    files = list_files_by_year(directory, spec.file_pattern)
    if not files:
        raise EmptyFile(f"No files matching {spec.file_pattern!r} in {directory}")

    result = TableSet()
    if years is not None:
        wanted = sorted(set(years))
        for year in wanted:
            if year not in files:
                result.errors[year] = YearNotFound(f"No file for {year} in {directory}")
        files = {year: path for year, path in files.items() if year in wanted}
    result.files = dict(files)

    loaded: Dict[int, TransactionTable] = {}
    with ThreadPoolExecutor(max_workers=max_workers) as pool:
        futures = {
            pool.submit(_load_one, spec.with_path(path, year), cache): year
            for year, path in files.items()
        }
        for future in tqdm(as_completed(futures), total=len(futures), desc="Parsing tables", disable=not show_progress):
            year = futures[future]
            try:
                table, from_cache = future.result()
            except (MrioError, OSError) as e:
                logger.error(f"Failed to load {files[year].name}: {e}")
                result.errors[year] = e
                continue
            loaded[year] = table
            if from_cache:
                result.cached.append(year)

    result.tables = [loaded[year] for year in sorted(loaded)]
    result.errors = dict(sorted(result.errors.items()))
    result.cached.sort()
    logger.info(f"Loaded {len(result.tables)} tables from {directory}, {len(result.errors)} failed")
    return result
