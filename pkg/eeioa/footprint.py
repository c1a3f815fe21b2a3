# ictog/eeioa/footprint.py
"""
Carbon footprints from direct intensities and final demand.
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Optional

import numpy as np

from mrio_core.exceptions import DimensionMismatch, NumericError
from mrio_core.groups import SectorGroup, resolve_group
from mrio_core.summation import exact_sum
from mrio_core.tables import RegionSectorIndex
from .coefficients import TechnicalCoefficients
from .solvers import LeontiefSolver, get_solver

logger = logging.getLogger(__name__)

KG_PER_KT = 1_000_000.0


@dataclass(frozen=True)
class FootprintResult:
    """
    Emissions attributed to each producing region-sector.

    ``total`` and ``breakdown`` are in kgCO2e when intensities are given in
    kgCO2e per table unit; ``total`` is the exact sum of ``breakdown``.
    """

    total: float
    breakdown: np.ndarray
    output: np.ndarray
    method: str = ""
    iterations: int = 0

    @property
    def total_kt(self) -> float:
        return self.total / KG_PER_KT

    def rows(self, index: RegionSectorIndex) -> List[Dict[str, Any]]:
        return [
            {"region": region, "sector": sector, "kgco2e": float(value)}
            for (region, sector), value in zip(index, self.breakdown)
        ]


def footprint(
    intensity: np.ndarray,
    coefficients: TechnicalCoefficients,
    demand: np.ndarray,
    solver: Optional[LeontiefSolver] = None,
) -> FootprintResult:
    """
    Footprint of a final demand: s_i x_i with x solving (I - A) x = y.

    Args:
        intensity: Direct intensities s (kgCO2e per table unit), all >= 0
        coefficients: A
        demand: Final demand y
        solver: Leontief solver (configured default when None)

    Returns:
        FootprintResult with per-source breakdown

    Raises:
        DimensionMismatch: s, A and y disagree in size
    """
    s = np.asarray(intensity, dtype=np.float64)
    if s.shape != (coefficients.size,):
        raise DimensionMismatch(f"Intensity length {s.shape} does not match coefficient size {coefficients.size}")
    if not np.all(np.isfinite(s)):
        raise NumericError("Intensity vector holds non-finite values")
    if np.any(s < 0):
        raise NumericError(f"{int((s < 0).sum())} negative intensities")

    result = (solver or get_solver()).solve(coefficients, demand)
    breakdown = s * result.output
    total = exact_sum(breakdown)

    logger.info(f"Footprint {total:.6g} kg over {coefficients.size} region-sectors ({result.method})")
    return FootprintResult(total, breakdown, result.output, result.method, result.iterations)


def group_footprint(
    result: FootprintResult,
    group: SectorGroup,
    index: RegionSectorIndex,
    strict: bool = True,
) -> float:
    """Part of a footprint produced by the members of ``group``."""
    if len(index) != len(result.breakdown):
        raise DimensionMismatch(f"Index length {len(index)} does not match footprint length {len(result.breakdown)}")
    positions = resolve_group(group, index, strict).array
    return exact_sum(result.breakdown[positions])
