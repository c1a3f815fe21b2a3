"""
Flow analytics package for ictog.
"""

from .models import FlowValue, FlowSeries, ContributorRanking, OverlayRow
from .analysis import (
    group_flow,
    outgoing_total,
    group_share,
    endogenous_flow,
    flow_series,
    top_contributors,
    comparison_ratio,
    overlay_prices,
    sector_breakdown,
    share_matrix,
    contributor_series,
)

__all__ = [
    "FlowValue",
    "FlowSeries",
    "ContributorRanking",
    "OverlayRow",
    "group_flow",
    "outgoing_total",
    "group_share",
    "endogenous_flow",
    "flow_series",
    "top_contributors",
    "comparison_ratio",
    "overlay_prices",
    "sector_breakdown",
    "share_matrix",
    "contributor_series",
]
