# ictog/flows/analysis.py
"""
Group-to-group aggregates over transaction tables.

Every aggregate sums the stored cells of a row/column block with
``exact_sum``, so results do not depend on the order of rows in the
source file. Group membership is resolved against each table's own index.
"""

import logging
from collections import defaultdict
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np
import scipy.sparse as sp

from ingest.vectors import PriceSeries
from mrio_core.exceptions import DuplicateYear, ZeroDenominator
from mrio_core.groups import SectorGroup, resolve_group
from mrio_core.summation import exact_sum
from mrio_core.tables import TransactionTable
from .models import ContributorRanking, FlowSeries, FlowValue, OverlayRow

logger = logging.getLogger(__name__)

GRANULARITIES = ("region", "sector")


def _block(
    table: TransactionTable,
    from_group: SectorGroup,
    to_group: Optional[SectorGroup],
    strict: bool,
) -> Tuple[np.ndarray, sp.csr_matrix]:
    """Row positions of ``from_group`` and the block of their cells (all columns when ``to_group`` is None)."""
    rows = resolve_group(from_group, table.index, strict).array
    block = table.cells[rows]
    if to_group is not None:
        cols = resolve_group(to_group, table.index, strict).array
        block = block[:, cols]
    return rows, sp.csr_matrix(block)


def _row_cells(block: sp.csr_matrix, k: int) -> np.ndarray:
    return block.data[block.indptr[k]:block.indptr[k + 1]]


def group_flow(
    table: TransactionTable,
    from_group: SectorGroup,
    to_group: SectorGroup,
    strict: bool = True,
) -> FlowValue:
    """
    Sum of Z[i, j] over i in ``from_group`` and j in ``to_group``.

    Raises:
        UnmatchedSelector: a group does not resolve against the table index
    """
    _, block = _block(table, from_group, to_group, strict)
    value = exact_sum(block.data)
    if value < 0:
        logger.warning(f"Negative aggregate {from_group.name}->{to_group.name} in {table.year}: {value}")
    return FlowValue(table.year, from_group.name, to_group.name, value)


def outgoing_total(table: TransactionTable, group: SectorGroup, strict: bool = True) -> float:
    """Total flow leaving the rows of ``group`` towards every column."""
    _, block = _block(table, group, None, strict)
    return exact_sum(block.data)


def _share(flow: float, total: float, table: TransactionTable, from_group: SectorGroup) -> float:
    if total <= 0:
        raise ZeroDenominator(
            f"Outgoing flow of {from_group.name} in {table.year} is {total}; share undefined"
        )
    return flow / total


def group_share(
    table: TransactionTable,
    from_group: SectorGroup,
    to_group: SectorGroup,
    strict: bool = True,
) -> float:
    """
    Share of ``from_group``'s outgoing flow that goes to ``to_group``.

    Raises:
        ZeroDenominator: the from-group rows sum to zero (or less)
    """
    flow = group_flow(table, from_group, to_group, strict).value
    return _share(flow, outgoing_total(table, from_group, strict), table, from_group)


def endogenous_flow(table: TransactionTable, group: SectorGroup, strict: bool = True) -> FlowValue:
    """Flow of a group to itself."""
    return group_flow(table, group, group, strict)


def flow_series(
    tables: Sequence[TransactionTable],
    from_group: SectorGroup,
    to_group: SectorGroup,
    strict: bool = True,
) -> FlowSeries:
    """
    Per-year flow and share, sorted by year.

    Args:
        tables: At least one table, one per year
        from_group: Source group
        to_group: Target group
        strict: Fail on selectors without match

    Returns:
        FlowSeries with shares and outgoing totals

    Raises:
        DuplicateYear: two tables share a year
    """
    if not tables:
        raise ValueError("flow_series needs at least one table")
    years = [t.year for t in tables]
    duplicates = sorted({y for y in years if years.count(y) > 1})
    if duplicates:
        raise DuplicateYear(f"Several tables for year(s) {', '.join(map(str, duplicates))}")

    points, shares, totals = [], [], []
    for table in sorted(tables, key=lambda t: t.year):
        flow = group_flow(table, from_group, to_group, strict)
        total = outgoing_total(table, from_group, strict)
        points.append(flow)
        shares.append(_share(flow.value, total, table, from_group))
        totals.append(total)

    series = FlowSeries(from_group.name, to_group.name, tuple(points), tuple(shares), tuple(totals))
    logger.info(
        f"{from_group.name}->{to_group.name} over {len(series)} years: "
        f"mean share {series.mean_share:.4%}, flow-weighted {series.weighted_mean_share:.4%}"
    )
    return series


def top_contributors(
    table: TransactionTable,
    from_group: SectorGroup,
    to_group: SectorGroup,
    granularity: str = "region",
    limit: Optional[int] = None,
    strict: bool = True,
) -> ContributorRanking:
    """
    Rank source regions (or source sector labels) by their flow to ``to_group``.

    Args:
        table: Table to analyse
        from_group: Source group
        to_group: Target group
        granularity: ``region`` or ``sector``
        limit: Keep this many rows (all when None)
        strict: Fail on selectors without match

    Returns:
        Ranking sorted by value descending, ties by code ascending
    """
    if granularity not in GRANULARITIES:
        raise ValueError(f"Unknown granularity {granularity!r}; use one of {', '.join(GRANULARITIES)}")
    if limit is not None and limit < 0:
        raise ValueError("limit must be >= 0")

    rows, block = _block(table, from_group, to_group, strict)
    key_position = 0 if granularity == "region" else 1
    cells_by_key: Dict[str, List[np.ndarray]] = defaultdict(list)
    for k, position in enumerate(rows):
        cells_by_key[table.index[position][key_position]].append(_row_cells(block, k))

    ranked = sorted(
        ((code, exact_sum(np.concatenate(parts))) for code, parts in cells_by_key.items()),
        key=lambda item: (-item[1], item[0]),
    )
    if limit is not None:
        ranked = ranked[:limit]
    return ContributorRanking(table.year, from_group.name, to_group.name, ranked, granularity)


def comparison_ratio(
    table: TransactionTable,
    from_group: SectorGroup,
    to_a: SectorGroup,
    to_b: SectorGroup,
    strict: bool = True,
) -> float:
    """
    Flow to ``to_a`` per unit of flow to ``to_b``.

    Raises:
        ZeroDenominator: the flow to ``to_b`` is zero
    """
    a = group_flow(table, from_group, to_a, strict).value
    b = group_flow(table, from_group, to_b, strict).value
    if b == 0:
        raise ZeroDenominator(f"No flow {from_group.name}->{to_b.name} in {table.year}")
    return a / b


def overlay_prices(series: FlowSeries, prices: PriceSeries) -> List[OverlayRow]:
    """Left join of a flow series with a price series on year; missing prices stay None."""
    shares = series.share_points or (None,) * len(series)
    rows = [
        OverlayRow(point.year, point.value, share, prices.get(point.year))
        for point, share in zip(series.points, shares)
    ]
    missing = sum(1 for row in rows if row.price is None)
    if missing:
        logger.info(f"{missing} of {len(rows)} years have no {prices.name} price")
    return rows


def sector_breakdown(
    table: TransactionTable,
    from_group: SectorGroup,
    to_group: SectorGroup,
    strict: bool = True,
) -> List[FlowValue]:
    """
    One flow per source sector label of ``from_group``, summed over regions.

    Labels keep the group's selector order; labels absent from the index are
    skipped in lenient mode.
    """
    rows, block = _block(table, from_group, to_group, strict)
    cells_by_label: Dict[str, List[np.ndarray]] = defaultdict(list)
    for k, position in enumerate(rows):
        cells_by_label[table.index[position][1]].append(_row_cells(block, k))

    return [
        FlowValue(table.year, label, to_group.name, exact_sum(np.concatenate(cells_by_label[label])))
        for label in from_group.labels
        if label in cells_by_label
    ]


def share_matrix(
    table: TransactionTable,
    groups: Sequence[SectorGroup],
    strict: bool = True,
) -> Dict[str, Dict[str, float]]:
    """
    Share of each group's outgoing flow that goes to every group.

    Returns:
        Nested mapping ``from -> to -> share``
    """
    matrix: Dict[str, Dict[str, float]] = {}
    for source in groups:
        total = outgoing_total(table, source, strict)
        matrix[source.name] = {
            target.name: _share(group_flow(table, source, target, strict).value, total, table, source)
            for target in groups
        }
    return matrix


def contributor_series(
    tables: Sequence[TransactionTable],
    from_group: SectorGroup,
    to_group: SectorGroup,
    regions: Optional[Iterable[str]] = None,
    limit: int = 5,
    strict: bool = True,
) -> Dict[str, FlowSeries]:
    """
    Yearly flow of individual source regions.

    Args:
        tables: One table per year
        from_group: Source group
        to_group: Target group
        regions: Regions to follow; when None, the ``limit`` biggest of the latest year
        limit: Number of regions picked when ``regions`` is None
        strict: Fail on selectors without match

    Returns:
        Region -> FlowSeries (without shares), in ranking or given order
    """
    if not tables:
        raise ValueError("contributor_series needs at least one table")
    ordered = sorted(tables, key=lambda t: t.year)
    rankings = [top_contributors(t, from_group, to_group, "region", None, strict) for t in ordered]

    if regions is None:
        regions = rankings[-1].codes[:limit]
    regions = list(regions)

    series: Dict[str, FlowSeries] = {}
    for region in regions:
        points = []
        for ranking in rankings:
            value = dict(ranking.rows).get(region, 0.0)
            points.append(FlowValue(ranking.year, f"{from_group.name}:{region}", to_group.name, value))
        series[region] = FlowSeries(f"{from_group.name}:{region}", to_group.name, tuple(points))
    return series
