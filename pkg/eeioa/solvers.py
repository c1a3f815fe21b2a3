# ictog/eeioa/solvers.py
"""
Leontief solvers for (I - A) x = y.

Neither strategy forms the inverse. ``IterativeSolver`` runs the stationary
iteration x <- y + A x and falls back to a sparse LU factorization when the
iteration cap is hit while deltas are still shrinking; ``DirectSolver``
factorizes I - A with ``scipy.sparse.linalg.splu``.
"""

import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Dict, List, Optional, Type

import numpy as np
import scipy.sparse as sp
from scipy.sparse.linalg import splu

from config.app_config import SolverConfig, get_config
from mrio_core.exceptions import DimensionMismatch, NonConvergence, NumericError
from .coefficients import TechnicalCoefficients

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SolveResult:
    output: np.ndarray
    method: str
    iterations: int = 0
    residual: float = 0.0


def _inf_norm(v: np.ndarray) -> float:
    return float(np.max(np.abs(v))) if v.size else 0.0


class LeontiefSolver(ABC):
    """Base class for Leontief solvers."""

    name = "base"

    def __init__(self, config: Optional[SolverConfig] = None):
        # Allow dependency injection or use global config
        self.config = config or get_config().solver

    def solve(self, coefficients: TechnicalCoefficients, demand: np.ndarray) -> SolveResult:
        """
        Solve (I - A) x = y and check the residual.

        Args:
            coefficients: A
            demand: y aligned to A

        Returns:
            SolveResult with x

        Raises:
            DimensionMismatch: y length differs from A
            NonConvergence: no solution within the configured limits
        """
        y = np.asarray(demand, dtype=np.float64)
        n = coefficients.size
        if y.shape != (n,):
            raise DimensionMismatch(f"Demand length {y.shape} does not match coefficient size {n}")
        if not np.all(np.isfinite(y)):
            raise NumericError("Demand holds non-finite values")

        y_norm = _inf_norm(y)
        if y_norm == 0:
            return SolveResult(np.zeros(n), self.name)

        result = self._solve(coefficients.matrix, y, y_norm)
        residual = _inf_norm(result.output - coefficients.matrix @ result.output - y)
        if not np.isfinite(residual) or residual > self.config.residual_tolerance * y_norm:
            raise NonConvergence(
                f"{result.method} solve residual {residual:.3g} exceeds "
                f"{self.config.residual_tolerance:.1g} x ||y||", result.iterations,
            )
        logger.debug(f"{result.method} solve of size {n}: {result.iterations} iterations, residual {residual:.3g}")
        return SolveResult(result.output, result.method, result.iterations, residual)

    @abstractmethod
    def _solve(self, matrix: sp.csr_matrix, y: np.ndarray, y_norm: float) -> SolveResult:
        pass


class DirectSolver(LeontiefSolver):
    """Sparse LU factorization of I - A."""

    name = "direct"

    def _solve(self, matrix: sp.csr_matrix, y: np.ndarray, y_norm: float) -> SolveResult:
        system = (sp.identity(matrix.shape[0], format="csc") - matrix.tocsc()).tocsc()
        try:
            lu = splu(system)
        except RuntimeError as e:
            raise NonConvergence(f"I - A is singular: {e}") from e
        return SolveResult(lu.solve(y), self.name)


class IterativeSolver(LeontiefSolver):
    """Stationary iteration x_{k+1} = y + A x_k starting from x_0 = y."""

    name = "iterative"

    def _solve(self, matrix: sp.csr_matrix, y: np.ndarray, y_norm: float) -> SolveResult:
        tolerance = self.config.tolerance * y_norm
        x = y.copy()
        deltas: List[float] = []
        growing = 0

        for iteration in range(1, self.config.max_iterations + 1):
            x_next = y + matrix @ x
            delta = _inf_norm(x_next - x)
            if not np.isfinite(delta):
                raise NonConvergence("Iteration produced non-finite values", iteration, deltas[-10:])
            if deltas and delta > deltas[-1]:
                growing += 1
            else:
                growing = 0
            deltas.append(delta)
            x = x_next

            if delta <= tolerance:
                return SolveResult(x, self.name, iteration)
            if growing >= self.config.divergence_window:
                raise NonConvergence(
                    f"Iteration diverges: {growing} consecutive growing deltas", iteration, deltas[-10:]
                )

        ratio = deltas[-1] / deltas[-2] if len(deltas) > 1 and deltas[-2] > 0 else float("inf")
        if self.config.fallback and ratio < 1.0:
            logger.warning(
                f"No convergence after {self.config.max_iterations} iterations "
                f"(contraction {ratio:.6f}); falling back to sparse LU"
            )
            result = DirectSolver(self.config)._solve(matrix, y, y_norm)
            return SolveResult(result.output, "iterative+direct", self.config.max_iterations)

        raise NonConvergence(
            f"No convergence after {self.config.max_iterations} iterations",
            self.config.max_iterations,
            deltas[-10:],
        )


SOLVERS: Dict[str, Type[LeontiefSolver]] = {
    "iterative": IterativeSolver,
    "direct": DirectSolver,
}


def get_solver(method: Optional[str] = None, config: Optional[SolverConfig] = None) -> LeontiefSolver:
    """
    Get a solver by name.

    Args:
        method: ``iterative`` or ``direct``; the configured method when None
        config: Solver configuration

    Returns:
        Solver instance
    """
    config = config or get_config().solver
    method = (method or config.method).lower()
    if method not in SOLVERS:
        raise ValueError(f"Unknown solver {method!r}; use one of {', '.join(SOLVERS)}")
    return SOLVERS[method](config)


def leontief_solve(
    coefficients: TechnicalCoefficients,
    demand: np.ndarray,
    solver: Optional[LeontiefSolver] = None,
) -> np.ndarray:
    """Output x with (I - A) x = y."""
    return (solver or get_solver()).solve(coefficients, demand).output
