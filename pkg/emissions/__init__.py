"""
Emissions package for ictog.

Exact added-emissions arithmetic, the case-study taxonomy, scenario files and
the estimators that reproduce the published case figures.
"""

from .calculations import (
    DEFAULT_KG_PER_BARREL,
    RampSchedule,
    PhysicalEmissionFactor,
    MonetaryEmissionFactor,
    WedgeResult,
    to_fraction,
    ramp_year_barrels,
    ramp_total_barrels,
    barrels_to_emissions,
    footprint_share,
    monetary_ef,
    savings_to_emissions,
    wedge_annualize,
)
from .display import display, to_decimal
from .taxonomy import Taxonomy, TaxonomyTags, load_taxonomy, classify_scenario, catalog_rows
from .scenarios import CaseScenario, load_scenario, parse_scenario, shipped_scenarios, SHIPPED_SCENARIOS
from .estimators import (
    CaseResult,
    TraceStep,
    Estimator,
    RampEstimator,
    MonetaryEstimator,
    WedgeEstimator,
    get_estimator,
    run_scenario,
    run_scenarios,
)

__all__ = [
    "DEFAULT_KG_PER_BARREL",
    "RampSchedule",
    "PhysicalEmissionFactor",
    "MonetaryEmissionFactor",
    "WedgeResult",
    "to_fraction",
    "ramp_year_barrels",
    "ramp_total_barrels",
    "barrels_to_emissions",
    "footprint_share",
    "monetary_ef",
    "savings_to_emissions",
    "wedge_annualize",
    "display",
    "to_decimal",
    "Taxonomy",
    "TaxonomyTags",
    "load_taxonomy",
    "classify_scenario",
    "catalog_rows",
    "CaseScenario",
    "load_scenario",
    "parse_scenario",
    "shipped_scenarios",
    "SHIPPED_SCENARIOS",
    "CaseResult",
    "TraceStep",
    "Estimator",
    "RampEstimator",
    "MonetaryEstimator",
    "WedgeEstimator",
    "get_estimator",
    "run_scenario",
    "run_scenarios",
]
