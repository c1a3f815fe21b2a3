# ictog/emissions/calculations.py
"""
Added-emissions arithmetic for ICT-enabled oil and gas cases.

All quantities are ``fractions.Fraction``; decimal inputs are converted
through their text form, so 431.87 is exactly 43187/100. Rounding happens
only when a value is displayed (see ``emissions.display``).
"""

import logging
from dataclasses import dataclass, field
from decimal import Decimal
from fractions import Fraction
from typing import Optional, Tuple, Union

from mrio_core.exceptions import InvalidRange, InvalidSchedule, YearOutOfRange, ZeroDenominator

logger = logging.getLogger(__name__)

Number = Union[int, float, str, Decimal, Fraction]

DAYS_PER_YEAR = 365
KG_PER_TONNE = 1000
KG_PER_KT = 1_000_000
KG_PER_GT = 10 ** 12
UNITS_PER_THOUSAND = 1000

# EPA greenhouse-gas equivalencies, one 42-gallon barrel of conventional oil.
DEFAULT_KG_PER_BARREL = Fraction("431.87")


def to_fraction(value: Number) -> Fraction:
    """Exact rational for a number; floats go through their shortest text."""
    if isinstance(value, bool):
        raise TypeError("booleans are not quantities")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        return Fraction(repr(value))
    return Fraction(value)


Range = Tuple[Fraction, Fraction]


def to_range(values: Tuple[Number, Number]) -> Range:
    low, high = (to_fraction(v) for v in values)
    if low < 0 or low > high:
        raise InvalidRange(f"Range ({low}, {high}) must satisfy 0 <= low <= high")
    return low, high


@dataclass(frozen=True)
class RampSchedule:
    """
    Linear production build-up.

    The rate is ``ramp_origin_rate`` in ``start_year`` and ``final_rate`` in
    ``end_year``, interpolated over ``end_year - start_year`` intervals.
    """

    start_year: int
    end_year: int
    final_rate: Fraction
    ramp_origin_rate: Fraction = Fraction(0)
    downtime_fraction: Fraction = Fraction(0)

    def __post_init__(self):
        for name in ("final_rate", "ramp_origin_rate", "downtime_fraction"):
            try:
                object.__setattr__(self, name, to_fraction(getattr(self, name)))
            except (TypeError, ValueError) as e:
                raise InvalidSchedule(f"{name}: {e}") from e
        if self.end_year <= self.start_year:
            raise InvalidSchedule(f"end_year {self.end_year} must be after start_year {self.start_year}")
        if self.ramp_origin_rate < 0 or self.final_rate < self.ramp_origin_rate:
            raise InvalidSchedule(
                f"Rates must satisfy final_rate >= ramp_origin_rate >= 0, got {self.final_rate} and {self.ramp_origin_rate}"
            )
        if not 0 <= self.downtime_fraction < 1:
            raise InvalidSchedule(f"downtime_fraction {self.downtime_fraction} outside [0, 1)")

    @property
    def years(self) -> range:
        return range(self.start_year, self.end_year + 1)

    @property
    def effective_days(self) -> Fraction:
        """Producing days per year: 365 x (1 - downtime)."""
        return DAYS_PER_YEAR * (1 - self.downtime_fraction)

    def rate(self, year: int) -> Fraction:
        """Barrels per day in ``year``."""
        if not self.start_year <= year <= self.end_year:
            raise YearOutOfRange(f"Year {year} outside ramp {self.start_year}-{self.end_year}")
        step = Fraction(year - self.start_year, self.end_year - self.start_year)
        return self.ramp_origin_rate + (self.final_rate - self.ramp_origin_rate) * step


@dataclass(frozen=True)
class PhysicalEmissionFactor:
    """kgCO2 per 42-gallon barrel."""

    value: Fraction = DEFAULT_KG_PER_BARREL
    source: str = "EPA greenhouse gas equivalencies"

    def __post_init__(self):
        object.__setattr__(self, "value", to_fraction(self.value))
        if self.value <= 0:
            raise InvalidRange(f"Emission factor {self.value} must be > 0")


@dataclass(frozen=True)
class MonetaryEmissionFactor:
    """kgCO2e per thousand currency units, with the figures it was derived from."""

    value: Fraction
    currency: str = "$"
    emissions_t: Optional[Fraction] = None
    profit: Optional[Fraction] = None
    year: Optional[int] = None
    scopes: Tuple[str, ...] = field(default_factory=tuple)

    @property
    def unit(self) -> str:
        return f"kgCO2e/k{self.currency}"


@dataclass(frozen=True)
class WedgeResult:
    """Annualized extra production and its emissions."""

    horizon_years: int
    annual_barrels: Range
    annual_kg: Range

    @property
    def annual_gt(self) -> Range:
        return tuple(v / KG_PER_GT for v in self.annual_kg)


def ramp_year_barrels(schedule: RampSchedule, year: int) -> Fraction:
    """
    Barrels produced in one year of a ramp: rate(year) x effective days.

    Raises:
        YearOutOfRange: year outside [start_year, end_year]
    """
    return schedule.rate(year) * schedule.effective_days


def ramp_total_barrels(schedule: RampSchedule) -> Fraction:
    """Barrels over every year of the ramp, both ends included."""
    return sum((ramp_year_barrels(schedule, year) for year in schedule.years), Fraction(0))


def barrels_to_emissions(barrels: Number, factor: PhysicalEmissionFactor) -> Fraction:
    """tCO2 for a number of barrels."""
    barrels = to_fraction(barrels)
    if barrels < 0:
        raise InvalidRange(f"Barrels {barrels} must be >= 0")
    return barrels * factor.value / KG_PER_TONNE


def footprint_share(added: Number, reference: Number) -> Fraction:
    """
    ``added`` as a percentage of ``reference``.

    Raises:
        ZeroDenominator: reference <= 0
    """
    added, reference = to_fraction(added), to_fraction(reference)
    if reference <= 0:
        raise ZeroDenominator(f"Reference footprint {reference} must be > 0")
    return 100 * added / reference


def monetary_ef(
    emissions_t: Number,
    profit: Number,
    currency: str = "$",
    year: Optional[int] = None,
    scopes: Tuple[str, ...] = (),
) -> MonetaryEmissionFactor:
    """
    Company-level monetary factor: emissions (kg) per thousand units of profit.

    Raises:
        ZeroDenominator: profit <= 0
    """
    emissions_t, profit = to_fraction(emissions_t), to_fraction(profit)
    if profit <= 0:
        raise ZeroDenominator(f"Profit {profit} must be > 0")
    if emissions_t < 0:
        raise InvalidRange(f"Emissions {emissions_t} must be >= 0")
    value = emissions_t * KG_PER_TONNE / (profit / UNITS_PER_THOUSAND)
    return MonetaryEmissionFactor(value, currency, emissions_t, profit, year, tuple(scopes))


def savings_to_emissions(savings: Tuple[Number, Number], factor: MonetaryEmissionFactor) -> Range:
    """
    ktCO2e per year for a (low, high) range of yearly savings.

    Raises:
        InvalidRange: low < 0 or low > high
    """
    low, high = to_range(savings)
    return tuple(bound / UNITS_PER_THOUSAND * factor.value / KG_PER_KT for bound in (low, high))


def wedge_annualize(
    total_barrels: Tuple[Number, Number],
    horizon_years: int,
    factor: Optional[PhysicalEmissionFactor] = None,
) -> WedgeResult:
    """
    Spread a cumulative extra-production range evenly over a horizon.

    Raises:
        InvalidRange: bad range or horizon_years <= 0
    """
    if horizon_years <= 0:
        raise InvalidRange(f"Horizon {horizon_years} must be > 0 years")
    factor = factor or PhysicalEmissionFactor()
    low, high = to_range(total_barrels)
    annual = (low / horizon_years, high / horizon_years)
    return WedgeResult(horizon_years, annual, tuple(b * factor.value for b in annual))
