# ictog/concordance/coverage.py
"""
Coverage of a concordance against the index of a table.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Tuple

from mrio_core.tables import RegionSectorIndex
from utils.text_utils import nearest_matches
from .loader import ConcordanceConfig

logger = logging.getLogger(__name__)

SUGGESTION_DISTANCE = 3


@dataclass(frozen=True)
class CoverageReport:
    """Per-label match counts; suggestions are informational and never applied."""

    counts: Dict[str, Dict[str, int]]
    unmatched: List[Tuple[str, str]] = field(default_factory=list)
    suggestions: Dict[str, List[str]] = field(default_factory=dict)

    @property
    def all_matched(self) -> bool:
        return not self.unmatched

    def matched_positions(self, group: str) -> int:
        return sum(self.counts.get(group, {}).values())

    def to_dict(self) -> Dict[str, Any]:
        return {
            "counts": self.counts,
            "unmatched": [{"group": g, "label": label} for g, label in self.unmatched],
            "suggestions": self.suggestions,
        }


def validate_against(config: ConcordanceConfig, index: RegionSectorIndex) -> CoverageReport:
    """
    Count how many index positions each concordance label matches.

    Args:
        config: Loaded concordance
        index: Index of the table to analyse

    Returns:
        CoverageReport; the concordance is not modified
    """
    known = index.sectors
    counts: Dict[str, Dict[str, int]] = {}
    unmatched: List[Tuple[str, str]] = []
    suggestions: Dict[str, List[str]] = {}

    for name, group in config.groups.items():
        counts[name] = {}
        for selector in group.selectors:
            hits = sum(
                1 for p in index.positions_for_sector(selector.sector)
                if selector.regions is None or index[p][0] in selector.regions
            )
            counts[name][selector.sector] = hits
            if hits == 0:
                unmatched.append((name, selector.sector))
                close = nearest_matches(selector.sector, known, SUGGESTION_DISTANCE)
                if close:
                    suggestions[selector.sector] = close

    if unmatched:
        logger.warning(f"{len(unmatched)} concordance labels match no sector of the index")
    return CoverageReport(counts=counts, unmatched=unmatched, suggestions=suggestions)
