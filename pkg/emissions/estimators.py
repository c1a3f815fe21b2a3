# ictog/emissions/estimators.py
"""
Estimator strategies for case scenarios.

Each estimator turns the inputs of a scenario into display figures (rounded
text), the exact values behind them and a step-by-step derivation trace.
"""

import logging
from abc import ABC, abstractmethod
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence

from .calculations import (
    KG_PER_GT,
    PhysicalEmissionFactor,
    RampSchedule,
    barrels_to_emissions,
    footprint_share,
    monetary_ef,
    ramp_total_barrels,
    ramp_year_barrels,
    savings_to_emissions,
    to_fraction,
    wedge_annualize,
)
from .display import display
from .scenarios import CaseScenario, MonetaryInputs, RampInputs, WedgeInputs

logger = logging.getLogger(__name__)

TONNES_PER_MT = 1_000_000
KT_PER_MT = 1000
BARRELS_PER_BN = 10 ** 9


@dataclass(frozen=True)
class TraceStep:
    label: str
    expression: str
    value: str

    def to_dict(self) -> Dict[str, str]:
        return {"step": self.label, "expression": self.expression, "value": self.value}


@dataclass
class CaseResult:
    """Outcome of one scenario."""

    name: str
    kind: str
    headline: str
    figures: Dict[str, str] = field(default_factory=dict)
    values: Dict[str, Fraction] = field(default_factory=dict)
    trace: List[TraceStep] = field(default_factory=list)
    tags: Dict[str, List[str]] = field(default_factory=dict)

    def step(self, label: str, expression: str, value: str) -> None:
        self.trace.append(TraceStep(label, expression, value))

    def record(self, key: str, value: Fraction, places: int, strip: bool = False) -> str:
        """Keep the exact value and its display text under ``key``."""
        self.values[key] = value
        self.figures[key] = display(value, places, strip=strip)
        return self.figures[key]

    def check(self, published: Dict[str, str]) -> Dict[str, Dict[str, Any]]:
        """Compare display figures against published ones."""
        return {
            key: {"expected": expected, "actual": self.figures.get(key), "ok": self.figures.get(key) == expected}
            for key, expected in published.items()
        }

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "kind": self.kind,
            "headline": self.headline,
            "figures": self.figures,
            "exact": {k: f"{v.numerator}/{v.denominator}" for k, v in self.values.items()},
            "trace": [s.to_dict() for s in self.trace],
            "tags": self.tags,
        }


class Estimator(ABC):
    """Base class for scenario estimators."""

    kind = "base"

    @abstractmethod
    def estimate(self, name: str, inputs) -> CaseResult:
        """Compute a case result from estimator inputs."""
        pass


class RampEstimator(Estimator):
    """Linear production ramp with downtime, valued with a per-barrel factor."""

    kind = "ramp"

    def estimate(self, name: str, inputs: RampInputs) -> CaseResult:
        schedule = RampSchedule(
            start_year=inputs.start_year,
            end_year=inputs.end_year,
            final_rate=to_fraction(inputs.final_rate),
            ramp_origin_rate=to_fraction(inputs.ramp_origin_rate),
            downtime_fraction=to_fraction(inputs.downtime_fraction),
        )
        factor = PhysicalEmissionFactor(to_fraction(inputs.emission_factor))
        headline_year = inputs.headline_year or schedule.end_year
        result = CaseResult(name, self.kind, "")

        days = schedule.effective_days
        result.step(
            "effective days per year",
            f"365 x (1 - {display(schedule.downtime_fraction, 4, strip=True)})",
            display(days, 2, strip=True),
        )
        for year in schedule.years:
            rate = schedule.rate(year)
            barrels = ramp_year_barrels(schedule, year)
            result.step(
                f"{year} barrels",
                f"{display(rate, 2, grouped=True, strip=True)} bbl/day x {display(days, 2, strip=True)} days",
                display(barrels, 2, grouped=True, strip=True),
            )

        total = ramp_total_barrels(schedule)
        result.record("total_barrels", total, 0)
        result.step(f"barrels {schedule.start_year}-{schedule.end_year}", "sum of yearly barrels",
                    display(total, 0, grouped=True))

        total_t = barrels_to_emissions(total, factor)
        result.record("total_tco2", total_t, 0)
        result.step("emissions over the ramp",
                    f"{display(total, 0, grouped=True)} bbl x {display(factor.value, 2)} kg / 1000",
                    f"{display(total_t, 1, grouped=True)} t -> {display(total_t, 0, grouped=True)} tCO2")

        year_barrels = ramp_year_barrels(schedule, headline_year)
        year_t = barrels_to_emissions(year_barrels, factor)
        result.record("headline_year_barrels", year_barrels, 0)
        result.record("headline_year_tco2", year_t, 0)
        headline_mt = result.record("headline_mtco2", year_t / TONNES_PER_MT, 1)
        result.step(f"emissions in {headline_year}",
                    f"{display(year_barrels, 0, grouped=True)} bbl x {display(factor.value, 2)} kg / 1000",
                    f"{display(year_t, 3, grouped=True)} t -> {display(year_t, 0, grouped=True)} tCO2")

        for label, reference in inputs.reference_footprints.items():
            share = footprint_share(year_t, to_fraction(reference))
            text = result.record(f"share_{label}_pct", share, 1)
            result.step(f"share of {label.replace('_', '-')} footprint",
                        f"100 x {display(year_t, 0, grouped=True)} / {display(to_fraction(reference), 0, grouped=True)}",
                        f"{text}%")

        result.headline = f"{headline_mt} MtCO2/yr"
        return result


class MonetaryEstimator(Estimator):
    """Yearly savings valued with a company-level monetary emission factor."""

    kind = "monetary"

    def estimate(self, name: str, inputs: MonetaryInputs) -> CaseResult:
        factor = monetary_ef(
            to_fraction(inputs.emissions_t),
            to_fraction(inputs.profit),
            currency=inputs.currency,
            year=inputs.year,
            scopes=tuple(inputs.scopes),
        )
        result = CaseResult(name, self.kind, "")
        ef_text = result.record("ef_kgco2e_per_kunit", factor.value, 0)
        result.step(
            "monetary emission factor",
            f"{display(factor.emissions_t, 0, grouped=True)} t x 1000 / "
            f"({display(factor.profit, 0, grouped=True)} {factor.currency} / 1000)",
            f"{display(factor.value, 2, grouped=True)} -> {ef_text} {factor.unit}"
            + (f" ({', '.join(factor.scopes)})" if factor.scopes else ""),
        )

        lows, highs = [], []
        for label, bounds in inputs.savings_ranges.items():
            low, high = savings_to_emissions(tuple(to_fraction(b) for b in bounds), factor)
            lows.append(low)
            highs.append(high)
            low_text = result.record(f"{label}_low_kt", low, 0)
            high_text = result.record(f"{label}_high_kt", high, 0)
            result.step(
                f"{label.replace('_', ' ')} savings",
                f"({display(to_fraction(bounds[0]), 0, grouped=True)}, {display(to_fraction(bounds[1]), 0, grouped=True)}) "
                f"{factor.currency}/yr / 1000 x {ef_text} kg / 1e6",
                f"({display(low, 2)}, {display(high, 2)}) -> ({low_text}, {high_text}) ktCO2e/yr",
            )

        low_mt = result.record("headline_low_mt", min(lows) / KT_PER_MT, 3, strip=True)
        high_mt = result.record("headline_high_mt", max(highs) / KT_PER_MT, 3, strip=True)
        result.headline = f"{low_mt}-{high_mt} MtCO2e/yr"
        return result


class WedgeEstimator(Estimator):
    """Cumulative extra production spread over a horizon."""

    kind = "wedge"

    def estimate(self, name: str, inputs: WedgeInputs) -> CaseResult:
        factor = PhysicalEmissionFactor(to_fraction(inputs.emission_factor))
        wedge = wedge_annualize(tuple(to_fraction(b) for b in inputs.total_barrels), inputs.horizon_years, factor)
        result = CaseResult(name, self.kind, "")

        low_bn = result.record("annual_barrels_low_bn", wedge.annual_barrels[0] / BARRELS_PER_BN, 0)
        high_bn = result.record("annual_barrels_high_bn", wedge.annual_barrels[1] / BARRELS_PER_BN, 0)
        result.step(
            "annual extra barrels",
            f"({display(to_fraction(inputs.total_barrels[0]) / BARRELS_PER_BN, 0)}, "
            f"{display(to_fraction(inputs.total_barrels[1]) / BARRELS_PER_BN, 0)}) bn bbl / {inputs.horizon_years} years",
            f"({display(wedge.annual_barrels[0] / BARRELS_PER_BN, 2)}, "
            f"{display(wedge.annual_barrels[1] / BARRELS_PER_BN, 2)}) -> ({low_bn}, {high_bn}) bn bbl/yr",
        )

        low_gt = result.record("annual_low_gt", wedge.annual_kg[0] / KG_PER_GT, 1)
        high_gt = result.record("annual_high_gt", wedge.annual_kg[1] / KG_PER_GT, 1)
        result.step(
            "annual emissions",
            f"annual barrels x {display(factor.value, 2)} kg / 1e12",
            f"({display(wedge.annual_kg[0] / KG_PER_GT, 3)}, {display(wedge.annual_kg[1] / KG_PER_GT, 3)}) "
            f"-> ({low_gt}, {high_gt}) GtCO2e/yr",
        )
        result.headline = f"{low_gt}-{high_gt} GtCO2e/yr"
        return result


ESTIMATORS = {
    "ramp": RampEstimator,
    "monetary": MonetaryEstimator,
    "wedge": WedgeEstimator,
}


def get_estimator(kind: str) -> Estimator:
    """
    Get an estimator by scenario kind.

    Args:
        kind: ``ramp``, ``monetary`` or ``wedge``

    Returns:
        Estimator instance
    """
    try:
        return ESTIMATORS[kind]()
    except KeyError:
        raise ValueError(f"Unknown estimator kind {kind!r}; use one of {', '.join(ESTIMATORS)}") from None


def run_scenario(scenario: CaseScenario) -> CaseResult:
    """Estimate one scenario and attach its tags."""
    result = get_estimator(scenario.estimator.kind).estimate(scenario.name, scenario.estimator)
    result.tags = scenario.tags.to_dict()
    logger.info(f"Scenario {scenario.name}: {result.headline}")
    return result


def run_scenarios(scenarios: Sequence[CaseScenario], max_workers: Optional[int] = None) -> List[CaseResult]:
    """Estimate several scenarios concurrently; results keep the input order."""
    with ThreadPoolExecutor(max_workers=max_workers) as pool:
        return list(pool.map(run_scenario, scenarios))
