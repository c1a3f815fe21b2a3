# ictog/tests/test_flows.py
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from flows.analysis import (
    comparison_ratio,
    contributor_series,
    endogenous_flow,
    flow_series,
    group_flow,
    group_share,
    outgoing_total,
    overlay_prices,
    sector_breakdown,
    share_matrix,
    top_contributors,
)
from flows.models import FlowSeries, FlowValue
from ingest.vectors import PriceSeries
from mrio_core.exceptions import DuplicateYear, NumericError, UnmatchedSelector, ZeroDenominator
from mrio_core.groups import SectorGroup
from mrio_core.tables import RegionSectorIndex, TransactionTable


class TestDesignedShares:
    def test_ict_to_og_share(self, synthetic_tables, groups):
        for table in synthetic_tables:
            assert group_share(table, groups["ICT"], groups["OG"]) == pytest.approx(0.02, rel=1e-12)

    def test_og_to_ict_share(self, synthetic_tables, groups):
        for table in synthetic_tables:
            assert group_share(table, groups["OG"], groups["ICT"]) == pytest.approx(0.004, rel=1e-12)

    def test_og_versus_rn_ratio(self, synthetic_tables, groups):
        for table in synthetic_tables:
            assert comparison_ratio(table, groups["ICT"], groups["OG"], groups["RN"]) == pytest.approx(4.0, rel=1e-12)

    def test_flow_scales_with_year(self, synthetic_tables, groups):
        values = [group_flow(t, groups["ICT"], groups["OG"]).value for t in synthetic_tables]
        assert values == pytest.approx([600.0, 900.0, 1200.0])

    def test_outgoing_total(self, table_2022, groups):
        assert outgoing_total(table_2022, groups["ICT"]) == pytest.approx(60000.0)

    def test_endogenous(self, table_2022, groups):
        flow = endogenous_flow(table_2022, groups["ICT"])
        assert flow.from_group == flow.to_group == "ICT"
        assert flow.value == pytest.approx(52500.0)


def brute_force(table, from_group, to_group):
    dense = table.to_dense()
    members = [
        [any(s.matches(*table.index[p]) for s in group.selectors) for p in range(len(table.index))]
        for group in (from_group, to_group)
    ]
    flow = outgoing = 0.0
    for i in range(dense.shape[0]):
        if not members[0][i]:
            continue
        for j in range(dense.shape[1]):
            outgoing += dense[i, j]
            if members[1][j]:
                flow += dense[i, j]
    return flow, outgoing


class TestBruteForceOracle:
    def test_every_group_pair(self, synthetic_tables, groups):
        for table in synthetic_tables:
            for source in groups.values():
                for target in groups.values():
                    flow, outgoing = brute_force(table, source, target)
                    assert group_flow(table, source, target).value == pytest.approx(flow, rel=1e-9)
                    assert outgoing_total(table, source) == pytest.approx(outgoing, rel=1e-9)
                    assert group_share(table, source, target) == pytest.approx(flow / outgoing, rel=1e-9)


class TestContributors:
    def test_region_ranking(self, synthetic_tables, groups):
        for table, scale in zip(synthetic_tables, (1.0, 1.5, 2.0)):
            ranking = top_contributors(table, groups["ICT"], groups["OG"])
            assert ranking.codes == ["US", "CN", "FR"]
            assert [v for _, v in ranking.rows] == pytest.approx([360 * scale, 180 * scale, 60 * scale])

    def test_limit(self, table_2022, groups):
        ranking = top_contributors(table_2022, groups["ICT"], groups["OG"], limit=2)
        assert ranking.codes == ["US", "CN"]
        assert [row["rank"] for row in ranking.to_rows()] == [1, 2]

    def test_ties_broken_by_code(self, table_2022, groups):
        ranking = top_contributors(table_2022, groups["ICT"], groups["OG"], granularity="sector")
        values = [v for _, v in ranking.rows]
        assert values == pytest.approx([240.0] * 5)
        assert ranking.codes == sorted(ranking.codes)

    def test_bad_arguments(self, table_2022, groups):
        with pytest.raises(ValueError):
            top_contributors(table_2022, groups["ICT"], groups["OG"], granularity="country")
        with pytest.raises(ValueError):
            top_contributors(table_2022, groups["ICT"], groups["OG"], limit=-1)

    def test_contributor_series(self, synthetic_tables, groups):
        series = contributor_series(synthetic_tables, groups["ICT"], groups["OG"], limit=2)
        assert list(series) == ["US", "CN"]
        assert series["US"].values == pytest.approx([360.0, 540.0, 720.0])
        assert series["US"].years == [2000, 2011, 2022]


class TestSeries:
    def test_series_sorted_with_shares(self, synthetic_tables, groups):
        series = flow_series(list(reversed(synthetic_tables)), groups["ICT"], groups["OG"])
        assert series.years == [2000, 2011, 2022]
        assert series.share_points == pytest.approx((0.02, 0.02, 0.02))
        assert series.mean_share == pytest.approx(0.02)
        assert series.weighted_mean_share == pytest.approx(0.02)
        assert [row["share"] for row in series.rows()] == pytest.approx([0.02] * 3)

    def test_duplicate_years(self, table_2022, groups):
        with pytest.raises(DuplicateYear):
            flow_series([table_2022, table_2022], groups["ICT"], groups["OG"])

    def test_empty(self, groups):
        with pytest.raises(ValueError):
            flow_series([], groups["ICT"], groups["OG"])

    def test_series_years_must_increase(self):
        points = (FlowValue(2011, "A", "B", 1.0), FlowValue(2000, "A", "B", 1.0))
        with pytest.raises(NumericError):
            FlowSeries("A", "B", points)

    def test_non_finite_flow(self):
        with pytest.raises(NumericError):
            FlowValue(2000, "A", "B", float("inf"))

    def test_overlay_left_join(self, synthetic_tables, groups):
        series = flow_series(synthetic_tables, groups["ICT"], groups["OG"])
        rows = overlay_prices(series, PriceSeries("brent", {2000: 28.5, 2022: 99.04, 2030: 80.0}))
        assert [row.year for row in rows] == [2000, 2011, 2022]
        assert [row.price for row in rows] == [28.5, None, 99.04]
        assert rows[1].flow == pytest.approx(900.0)


class TestBreakdownAndMatrix:
    def test_breakdown_by_activity(self, table_2022, groups):
        flows = sector_breakdown(table_2022, groups["ICT"], groups["OG"])
        assert [f.from_group for f in flows] == list(groups["ICT"].labels)
        assert [f.value for f in flows] == pytest.approx([240.0] * 5)
        assert sum(f.value for f in flows) == pytest.approx(group_flow(table_2022, groups["ICT"], groups["OG"]).value)

    def test_share_matrix_rows_cover_groups(self, table_2022, groups):
        matrix = share_matrix(table_2022, list(groups.values()))
        assert matrix["ICT"]["OG"] == pytest.approx(0.02)
        assert matrix["OG"]["ICT"] == pytest.approx(0.004)
        assert matrix["ICT"]["ICT"] + matrix["ICT"]["OG"] + matrix["ICT"]["RN"] == pytest.approx(0.9)


class TestEdgeCases:
    @pytest.fixture
    def small_table(self):
        index = RegionSectorIndex.product(["AA"], ["ict", "oil", "wind"])
        matrix = np.array([
            [1.0, -2.0, 0.0],
            [0.0, 0.0, 0.0],
            [3.0, 1.0, 0.0],
        ])
        return TransactionTable.from_dense(2020, index, matrix)

    def test_negative_aggregate_kept(self, small_table):
        flow = group_flow(small_table, SectorGroup.of_labels("ICT", ["ict"]), SectorGroup.of_labels("OG", ["oil"]))
        assert flow.value == -2.0

    def test_zero_outgoing_total(self, small_table):
        with pytest.raises(ZeroDenominator):
            group_share(small_table, SectorGroup.of_labels("OG", ["oil"]), SectorGroup.of_labels("ICT", ["ict"]))

    def test_non_positive_outgoing_total(self, small_table):
        ict = SectorGroup.of_labels("ICT", ["ict"])
        with pytest.raises(ZeroDenominator):
            group_share(small_table, ict, SectorGroup.of_labels("OG", ["oil"]))

    def test_zero_ratio_denominator(self, small_table):
        ict, oil, wind = (SectorGroup.of_labels(n, [n]) for n in ("ict", "oil", "wind"))
        with pytest.raises(ZeroDenominator):
            comparison_ratio(small_table, ict, oil, wind)

    def test_unmatched_group(self, small_table):
        with pytest.raises(UnmatchedSelector):
            group_flow(small_table, SectorGroup.of_labels("ICT", ["ICT"]), SectorGroup.of_labels("OG", ["oil"]))


@st.composite
def tables_with_permutation(draw):
    n = draw(st.integers(min_value=3, max_value=7))
    cells = draw(st.lists(
        st.floats(min_value=-1e6, max_value=1e6, allow_nan=False, allow_infinity=False),
        min_size=n * n, max_size=n * n,
    ))
    order = draw(st.permutations(range(n)))
    return n, np.array(cells).reshape(n, n), list(order)


class TestPermutationInvariance:
    @settings(max_examples=60, deadline=None)
    @given(tables_with_permutation())
    def test_aggregates_bit_identical_under_reordering(self, case):
        n, matrix, order = case
        index = RegionSectorIndex.from_pairs(("R", f"s{i}") for i in range(n))
        table = TransactionTable.from_dense(2000, index, matrix)
        permuted = table.permuted(order)
        source = SectorGroup.of_labels("A", ["s0", "s1"])
        target = SectorGroup.of_labels("B", ["s1", "s2"])

        assert group_flow(permuted, source, target).value == group_flow(table, source, target).value
        assert outgoing_total(permuted, source) == outgoing_total(table, source)
        assert top_contributors(permuted, source, target, "sector").rows == \
            top_contributors(table, source, target, "sector").rows


class TestDecomposition:
    def test_sector_flows_sum_to_group_flow(self, synthetic_tables, groups):
        for table in synthetic_tables:
            for source in groups.values():
                for target in groups.values():
                    parts = sector_breakdown(table, source, target)
                    total = group_flow(table, source, target).value
                    assert sum(f.value for f in parts) == pytest.approx(total, rel=1e-12, abs=1e-9)

    @pytest.mark.parametrize("granularity", ["region", "sector"])
    def test_all_contributors_sum_to_group_flow(self, synthetic_tables, groups, granularity):
        for table in synthetic_tables:
            for source in groups.values():
                for target in groups.values():
                    ranking = top_contributors(table, source, target, granularity)
                    total = group_flow(table, source, target).value
                    assert sum(v for _, v in ranking.rows) == pytest.approx(total, rel=1e-12, abs=1e-9)

    @settings(max_examples=40, deadline=None)
    @given(tables_with_permutation())
    def test_decomposition_on_random_tables(self, case):
        n, matrix, _ = case
        index = RegionSectorIndex.from_pairs((f"R{i % 2}", f"s{i // 2}") for i in range(n))
        table = TransactionTable.from_dense(2000, index, matrix)
        source = SectorGroup.of_labels("A", ["s0", "s1"])
        target = SectorGroup.of_labels("B", ["s1"])
        total = group_flow(table, source, target).value

        by_sector = sum(f.value for f in sector_breakdown(table, source, target))
        by_region = sum(v for _, v in top_contributors(table, source, target).rows)
        assert by_sector == pytest.approx(total, rel=1e-9, abs=1e-6)
        assert by_region == pytest.approx(total, rel=1e-9, abs=1e-6)
