"""
Environmentally extended input-output analysis for ictog.
"""

from .coefficients import TechnicalCoefficients, technical_coefficients, total_output_from_demand
from .solvers import (
    SolveResult,
    LeontiefSolver,
    IterativeSolver,
    DirectSolver,
    get_solver,
    leontief_solve,
)
from .footprint import FootprintResult, footprint, group_footprint

__all__ = [
    "TechnicalCoefficients",
    "technical_coefficients",
    "total_output_from_demand",
    "SolveResult",
    "LeontiefSolver",
    "IterativeSolver",
    "DirectSolver",
    "get_solver",
    "leontief_solve",
    "FootprintResult",
    "footprint",
    "group_footprint",
]
