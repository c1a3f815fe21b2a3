# ictog/flows/models.py
"""
Result types of the flow analytics.
"""

import math
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from mrio_core.exceptions import DuplicateYear, NumericError
from mrio_core.summation import exact_sum


@dataclass(frozen=True)
class FlowValue:
    """Aggregate flow between two groups in one year, in the table unit."""

    year: int
    from_group: str
    to_group: str
    value: float

    def __post_init__(self):
        if not math.isfinite(self.value):
            raise NumericError(f"Non-finite flow {self.from_group}->{self.to_group} in {self.year}")

    def to_dict(self) -> Dict[str, Any]:
        return {"year": self.year, "from": self.from_group, "to": self.to_group, "value": self.value}


@dataclass(frozen=True)
class FlowSeries:
    """
    Per-year flows between two groups.

    ``share_points`` and ``totals`` run parallel to ``points``: the share of
    the from-group's outgoing flow and that outgoing total.
    """

    from_group: str
    to_group: str
    points: Tuple[FlowValue, ...]
    share_points: Optional[Tuple[float, ...]] = None
    totals: Optional[Tuple[float, ...]] = None

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(self.points))
        years = self.years
        for a, b in zip(years, years[1:]):
            if b == a:
                raise DuplicateYear(f"Year {a} appears twice in the series")
            if b < a:
                raise NumericError("Series years must be strictly increasing")
        for extra in (self.share_points, self.totals):
            if extra is not None and len(extra) != len(self.points):
                raise NumericError("Parallel series lengths differ")

    @property
    def years(self) -> List[int]:
        return [p.year for p in self.points]

    @property
    def values(self) -> List[float]:
        return [p.value for p in self.points]

    def __len__(self) -> int:
        return len(self.points)

    @property
    def mean_share(self) -> Optional[float]:
        """Unweighted mean of the annual shares."""
        if not self.share_points:
            return None
        return exact_sum(self.share_points) / len(self.share_points)

    @property
    def weighted_mean_share(self) -> Optional[float]:
        """Period flow over period outgoing total."""
        if not self.totals:
            return None
        denominator = exact_sum(self.totals)
        return exact_sum(self.values) / denominator if denominator else None

    def rows(self) -> List[Dict[str, Any]]:
        shares = self.share_points or (None,) * len(self.points)
        return [
            {"year": p.year, "from": p.from_group, "to": p.to_group, "value": p.value, "share": s}
            for p, s in zip(self.points, shares)
        ]


@dataclass(frozen=True)
class ContributorRanking:
    """Flows grouped by source, sorted descending, ties by code ascending."""

    year: int
    from_group: str
    to_group: str
    rows: List[Tuple[str, float]] = field(default_factory=list)
    granularity: str = "region"

    @property
    def codes(self) -> List[str]:
        return [code for code, _ in self.rows]

    def to_rows(self) -> List[Dict[str, Any]]:
        return [
            {"rank": rank, "year": self.year, self.granularity: code, "value": value}
            for rank, (code, value) in enumerate(self.rows, start=1)
        ]


@dataclass(frozen=True)
class OverlayRow:
    """One year of a flow series joined with a price; ``price`` is None when absent."""

    year: int
    flow: float
    share: Optional[float]
    price: Optional[float]

    def to_dict(self) -> Dict[str, Any]:
        return {"year": self.year, "flow": self.flow, "share": self.share, "price": self.price}
