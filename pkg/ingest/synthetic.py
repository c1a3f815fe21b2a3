# ictog/ingest/synthetic.py
"""
Designed multi-region tables with known aggregate flows.

Default design, 3 regions x 10 sectors (US, CN, FR with source weights 6:3:1):

* every ICT row sends 2% of its output to O&G and a quarter of that to R&N,
  so ICT->O&G is 2.0% and ICT->O&G : ICT->R&N is 4.0;
* every O&G row sends 0.4% of its output to ICT;
* per unit of year scale, ICT->O&G totals 600 with US/CN/FR contributing
  360/180/60.
"""

import logging
from pathlib import Path
from typing import Dict, List, Mapping, Optional, Sequence, Union

import numpy as np

from concordance.loader import write_concordance
from mrio_core.tables import RegionSectorIndex, TransactionTable
from utils.file_utils import ensure_directory
from .mrio_reader import MrioFileSpec, write_mrio

logger = logging.getLogger(__name__)

ICT_SECTORS = [
    "Manufacture of office machinery and computers (30)",
    "Manufacture of radio, television and communication equipment and apparatus (32)",
    "Post and telecommunications (64)",
    "Computer and related activities (72)",
    "Publishing, printing and reproduction of recorded media (22)",
]
OG_SECTORS = [
    "Extraction of crude petroleum and services related to crude oil extraction, excluding surveying",
    "Petroleum Refinery",
]
RN_SECTORS = [
    "Production of electricity by nuclear",
    "Production of electricity by wind",
]
OTHER_SECTORS = [
    "Cultivation of wheat",
]

DEFAULT_REGIONS = {"US": 6.0, "CN": 3.0, "FR": 1.0}
DEFAULT_YEAR_SCALES = {2000: 1.0, 2011: 1.5, 2022: 2.0}

# Cell value by (row category, column category); ICT rows are multiplied by the source-region weight.
DEFAULT_CELLS: Dict[str, Dict[str, float]] = {
    "ICT": {"ICT": 35.0, "OG": 2.0, "RN": 0.5, "OTHER": 20.0},
    "OG": {"ICT": 0.4, "OG": 200.0, "RN": 29.0, "OTHER": 40.0},
    "RN": {"ICT": 1.0, "OG": 1.0, "RN": 1.0, "OTHER": 1.0},
    "OTHER": {"ICT": 10.0, "OG": 10.0, "RN": 10.0, "OTHER": 10.0},
}


class SyntheticTableGenerator:
    """Builds designed transaction tables and writes them as a dataset."""

    def __init__(
        self,
        regions: Optional[Mapping[str, float]] = None,
        categories: Optional[Mapping[str, Sequence[str]]] = None,
        cells: Optional[Mapping[str, Mapping[str, float]]] = None,
        negative_adjustment: float = 0.0,
    ):
        """
        Args:
            regions: Region code -> weight applied to ICT rows
            categories: Category -> sector labels, in index order
            cells: Category x category cell values
            negative_adjustment: When > 0, each region's OTHER->OTHER own cell is set to minus this
        """
        self.regions = dict(regions or DEFAULT_REGIONS)
        self.categories = {k: list(v) for k, v in (categories or {
            "ICT": ICT_SECTORS,
            "OG": OG_SECTORS,
            "RN": RN_SECTORS,
            "OTHER": OTHER_SECTORS,
        }).items()}
        self.cells = {k: dict(v) for k, v in (cells or DEFAULT_CELLS).items()}
        self.negative_adjustment = negative_adjustment

        self._sector_category = {
            sector: category for category, sectors in self.categories.items() for sector in sectors
        }
        self.index = RegionSectorIndex.product(self.regions, self.sectors)

    @property
    def sectors(self) -> List[str]:
        return [sector for sectors in self.categories.values() for sector in sectors]

    def category_of(self, sector: str) -> str:
        return self._sector_category[sector]

    def matrix(self, scale: float = 1.0) -> np.ndarray:
        """Dense designed matrix for one year scale."""
        n = len(self.index)
        z = np.zeros((n, n))
        for i, (row_region, row_sector) in enumerate(self.index):
            row_category = self.category_of(row_sector)
            weight = self.regions[row_region] if row_category == "ICT" else 1.0
            for j, (col_region, col_sector) in enumerate(self.index):
                col_category = self.category_of(col_sector)
                z[i, j] = self.cells[row_category][col_category] * weight * scale
                if (
                    self.negative_adjustment > 0
                    and row_category == col_category == "OTHER"
                    and row_region == col_region
                ):
                    z[i, j] = -self.negative_adjustment * scale
        return z

    def generate(self, year: int, scale: float = 1.0) -> TransactionTable:
        return TransactionTable.from_dense(year, self.index, self.matrix(scale), source=f"synthetic:{year}")

    def generate_series(self, year_scales: Optional[Mapping[int, float]] = None) -> List[TransactionTable]:
        year_scales = year_scales or DEFAULT_YEAR_SCALES
        return [self.generate(year, scale) for year, scale in sorted(year_scales.items())]

    def group_labels(self) -> Dict[str, List[str]]:
        """Sector labels of the analysis groups present in the design."""
        return {name: list(self.categories[name]) for name in ("ICT", "OG", "RN") if name in self.categories}

    def write_dataset(
        self,
        directory: Union[str, Path],
        year_scales: Optional[Mapping[int, float]] = None,
        spec: Optional[MrioFileSpec] = None,
    ) -> Dict[int, Path]:
        """
        Write one file per year plus a ``concordance.yaml`` matching the design.

        Args:
            directory: Target directory
            year_scales: Year -> scale factor
            spec: Layout template (defaults to the ingest configuration)

        Returns:
            Mapping year -> written file
        """
        directory = ensure_directory(directory)
        spec = spec or MrioFileSpec.from_config(directory)

        written = {}
        for table in self.generate_series(year_scales):
            path = directory / spec.file_pattern.replace("{year}", str(table.year))
            written[table.year] = write_mrio(table, spec.with_path(path, table.year))

        write_concordance(self.group_labels(), directory / "concordance.yaml")
        logger.info(f"Wrote synthetic dataset of {len(written)} years to {directory}")
        return written
