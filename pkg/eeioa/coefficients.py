# ictog/eeioa/coefficients.py
"""
Technical coefficients A = Z diag(x)^-1.
"""

import logging
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np
import scipy.sparse as sp

from mrio_core.exceptions import DimensionMismatch, NegativeOutput, NumericError
from mrio_core.tables import RegionSectorIndex, TransactionTable

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TechnicalCoefficients:
    """Input requirements per unit of output; zero-output columns are all zero."""

    matrix: sp.csr_matrix
    total_output: Optional[np.ndarray] = None
    index: Optional[RegionSectorIndex] = None
    zero_output_columns: Tuple[int, ...] = ()

    @property
    def size(self) -> int:
        return self.matrix.shape[0]

    @property
    def column_sums(self) -> np.ndarray:
        return np.asarray(self.matrix.sum(axis=0)).ravel()

    @property
    def max_column_sum(self) -> float:
        return float(self.column_sums.max()) if self.size else 0.0

    @property
    def is_productive(self) -> bool:
        """Every column sum below 1."""
        return self.max_column_sum < 1.0

    @classmethod
    def from_dense(cls, matrix, index: Optional[RegionSectorIndex] = None) -> "TechnicalCoefficients":
        """Wrap a coefficient matrix given directly."""
        dense = np.asarray(matrix, dtype=np.float64)
        if dense.ndim != 2 or dense.shape[0] != dense.shape[1]:
            raise DimensionMismatch(f"Coefficient matrix must be square, got {dense.shape}")
        if not np.all(np.isfinite(dense)):
            raise NumericError("Coefficient matrix holds non-finite values")
        coefficients = cls(matrix=sp.csr_matrix(dense), index=index)
        _warn_column_sums(coefficients)
        return coefficients


def _warn_column_sums(coefficients: TechnicalCoefficients) -> None:
    sums = coefficients.column_sums
    over = np.flatnonzero(sums >= 1.0)
    if over.size:
        logger.warning(
            f"{over.size} coefficient columns sum to >= 1 (max {sums.max():.6g}); "
            f"the Leontief series may not converge"
        )


def total_output_from_demand(table: TransactionTable, demand: np.ndarray) -> np.ndarray:
    """
    Total output x = Z 1 + y.

    Args:
        table: Transaction table
        demand: Final demand aligned to the table index

    Returns:
        Total output per region-sector
    """
    demand = np.asarray(demand, dtype=np.float64)
    if demand.shape != (len(table.index),):
        raise DimensionMismatch(f"Demand length {demand.shape} does not match index length {len(table.index)}")
    return np.asarray(table.cells.sum(axis=1)).ravel() + demand


def technical_coefficients(table: TransactionTable, total_output: np.ndarray) -> TechnicalCoefficients:
    """
    Normalize every column of Z by the total output of its sector.

    Args:
        table: Transaction table
        total_output: x aligned to the table index, all entries >= 0

    Returns:
        TechnicalCoefficients; columns with x[j] == 0 are zero and reported

    Raises:
        DimensionMismatch: x length differs from the index length
        NegativeOutput: an entry of x is negative
    """
    x = np.asarray(total_output, dtype=np.float64)
    n = len(table.index)
    if x.shape != (n,):
        raise DimensionMismatch(f"Total output length {x.shape} does not match index length {n}")
    if not np.all(np.isfinite(x)):
        raise NumericError("Total output holds non-finite values")
    if np.any(x < 0):
        raise NegativeOutput(f"{int((x < 0).sum())} negative total-output entries")

    zero_columns = np.flatnonzero(x == 0)
    divisor = np.where(x > 0, x, 1.0)

    matrix = table.cells.copy()
    matrix.data = np.where(x[matrix.indices] > 0, matrix.data / divisor[matrix.indices], 0.0)
    matrix.eliminate_zeros()

    if zero_columns.size:
        logger.info(f"{zero_columns.size} zero-output sectors carried as zero columns")

    coefficients = TechnicalCoefficients(
        matrix=matrix,
        total_output=x,
        index=table.index,
        zero_output_columns=tuple(int(j) for j in zero_columns),
    )
    _warn_column_sums(coefficients)
    return coefficients
