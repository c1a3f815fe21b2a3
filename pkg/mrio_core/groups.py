# ictog/mrio_core/groups.py
"""
Named sector groups and their resolution against a region-sector index.
"""

import logging
from dataclasses import dataclass
from typing import FrozenSet, Iterable, Optional, Tuple

import numpy as np

from utils.text_utils import closest_match, normalize_label
from .exceptions import UnmatchedSelector
from .tables import RegionSectorIndex

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GroupSelector:
    """Matches one sector label, in every region (``regions is None``) or in a region set."""

    sector: str
    regions: Optional[FrozenSet[str]] = None

    def __post_init__(self):
        object.__setattr__(self, "sector", normalize_label(self.sector))
        if self.regions is not None:
            object.__setattr__(self, "regions", frozenset(normalize_label(r) for r in self.regions))

    def matches(self, region: str, sector: str) -> bool:
        if sector != self.sector:
            return False
        return self.regions is None or region in self.regions

    def describe(self) -> str:
        scope = "all regions" if self.regions is None else ",".join(sorted(self.regions))
        return f"{self.sector} [{scope}]"


@dataclass(frozen=True)
class SectorGroup:
    name: str
    selectors: Tuple[GroupSelector, ...]
    description: str = ""

    def __post_init__(self):
        if not self.selectors:
            raise ValueError(f"Group {self.name!r} needs at least one selector")
        object.__setattr__(self, "selectors", tuple(self.selectors))

    @classmethod
    def of_labels(
        cls,
        name: str,
        labels: Iterable[str],
        regions: Optional[Iterable[str]] = None,
        description: str = "",
    ) -> "SectorGroup":
        region_set = frozenset(regions) if regions is not None else None
        return cls(name, tuple(GroupSelector(label, region_set) for label in labels), description)

    @property
    def labels(self) -> Tuple[str, ...]:
        return tuple(dict.fromkeys(selector.sector for selector in self.selectors))


@dataclass(frozen=True)
class GroupResolution:
    """Positions matched by a group, plus the match count of every selector."""

    group: str
    positions: FrozenSet[int]
    counts: Tuple[int, ...]

    @property
    def array(self) -> np.ndarray:
        """Sorted positions as an index array."""
        return np.array(sorted(self.positions), dtype=np.int64)

    def __len__(self) -> int:
        return len(self.positions)


def resolve_group(group: SectorGroup, index: RegionSectorIndex, strict: bool = True) -> GroupResolution:
    """
    Resolve a group to ordinal positions of an index.

    Args:
        group: Group to resolve
        index: Index of the table being analysed
        strict: Raise when a selector matches nothing; otherwise log and skip it

    Returns:
        Matched positions and per-selector match counts

    Raises:
        UnmatchedSelector: a selector matched nothing (strict), or the whole group is empty
    """
    if len(index) == 0:
        raise UnmatchedSelector(group.name, [s.describe() for s in group.selectors])

    positions = set()
    counts = []
    unmatched = []
    for selector in group.selectors:
        hits = [
            p for p in index.positions_for_sector(selector.sector)
            if selector.regions is None or index[p][0] in selector.regions
        ]
        counts.append(len(hits))
        positions.update(hits)
        if not hits:
            unmatched.append(selector)

    if unmatched and (strict or not positions):
        known = index.sectors
        suggestions = {
            s.describe(): closest_match(s.sector, known) for s in unmatched
        } if known else {}
        raise UnmatchedSelector(group.name, [s.describe() for s in unmatched], suggestions)

    for selector in unmatched:
        logger.warning(f"Group {group.name}: selector '{selector.describe()}' matched nothing")

    return GroupResolution(group.name, frozenset(positions), tuple(counts))
