# ictog/tests/test_ingest.py
import math
import time

import numpy as np
import pytest

from ingest.cache import TableCache
from ingest.mrio_reader import SINGLE_REGION, MrioFileSpec, format_cell, parse_mrio, write_mrio
from ingest.synthetic import DEFAULT_YEAR_SCALES
from ingest.table_set import load_table_set
from ingest.vectors import (
    PriceSeries,
    parse_extension,
    parse_price_series,
    parse_region_sector_vector,
)
from mrio_core.exceptions import (
    DuplicateYear,
    EmptyFile,
    MalformedHeader,
    NonNumericCell,
    NonPositivePrice,
    UndecodableText,
    UnknownRegionSector,
    YearNotFound,
)
from mrio_core.tables import RegionSectorIndex, TransactionTable

HEADER = "\t\tXX\tXX\n\t\tA\tB\n"


def write(path, text):
    path.write_text(text, encoding="utf-8")
    return path


def spec_for(path, **overrides):
    return MrioFileSpec(path=path, **overrides)


def scanned_total(path, header_rows=2, label_cols=2):
    """Sum of every matrix cell, read line by line without pandas."""
    values = []
    with open(path, encoding="utf-8") as f:
        for number, line in enumerate(f):
            if number < header_rows or not line.strip():
                continue
            values.extend(float(cell) for cell in line.rstrip("\n").split("\t")[label_cols:])
    return math.fsum(values)


class TestParseMrio:
    def test_hand_table(self, fixtures_dir):
        table = parse_mrio(spec_for(fixtures_dir / "hand" / "IOT_2022_ixi.txt"))
        assert table.year == 2022
        assert list(table.index) == [("XX", "A"), ("XX", "B")]
        np.testing.assert_array_equal(table.to_dense(), [[0.0, 2.0], [1.0, 0.0]])
        assert table.nnz == 2

    def test_negative_cells_kept_and_counted(self, fixtures_dir):
        table = parse_mrio(spec_for(fixtures_dir / "small_mrio.txt", year=2011))
        assert table.year == 2011
        assert table.meta.negative_cells == 1
        assert table.nnz == 12
        dense = table.to_dense()
        assert dense[table.index.position("DE", "Petroleum Refinery"),
                     table.index.position("JP", "Computer and related activities (72)")] == -0.5

    def test_scientific_notation_rejected_with_position(self, tmp_path):
        path = write(tmp_path / "IOT_2022_ixi.txt", HEADER + "XX\tA\t0\t1e5\nXX\tB\t1\t0\n")
        with pytest.raises(NonNumericCell) as excinfo:
            parse_mrio(spec_for(path))
        assert (excinfo.value.row, excinfo.value.col) == (3, 4)
        assert excinfo.value.value == "1e5"

    def test_empty_cell_rejected(self, tmp_path):
        path = write(tmp_path / "IOT_2022_ixi.txt", HEADER + "XX\tA\t0\t2\nXX\tB\t\t0\n")
        with pytest.raises(NonNumericCell) as excinfo:
            parse_mrio(spec_for(path))
        assert (excinfo.value.row, excinfo.value.col) == (4, 3)

    def test_empty_file(self, tmp_path):
        path = write(tmp_path / "IOT_2022_ixi.txt", "")
        with pytest.raises(EmptyFile):
            parse_mrio(spec_for(path))

    def test_row_labels_must_follow_header(self, tmp_path):
        path = write(tmp_path / "IOT_2022_ixi.txt", HEADER + "XX\tB\t0\t2\nXX\tA\t1\t0\n")
        with pytest.raises(MalformedHeader):
            parse_mrio(spec_for(path))

    def test_short_row_rejected(self, tmp_path):
        path = write(tmp_path / "IOT_2022_ixi.txt", HEADER + "XX\tA\t0\t2\nXX\tB\t1\n")
        with pytest.raises(MalformedHeader):
            parse_mrio(spec_for(path))

    def test_missing_rows_rejected(self, tmp_path):
        path = write(tmp_path / "IOT_2022_ixi.txt", HEADER + "XX\tA\t0\t2\n")
        with pytest.raises(MalformedHeader):
            parse_mrio(spec_for(path))

    def test_year_needs_pattern_or_explicit_value(self, tmp_path):
        path = write(tmp_path / "table.txt", HEADER + "XX\tA\t0\t2\nXX\tB\t1\t0\n")
        with pytest.raises(YearNotFound):
            parse_mrio(spec_for(path))
        assert parse_mrio(spec_for(path, year=1995)).year == 1995

    def test_decimal_comma(self, tmp_path):
        path = write(tmp_path / "IOT_2022_ixi.txt", HEADER + "XX\tA\t0\t2,5\nXX\tB\t,25\t0\n")
        table = parse_mrio(spec_for(path, decimal_comma=True))
        np.testing.assert_array_equal(table.to_dense(), [[0.0, 2.5], [0.25, 0.0]])

    def test_single_region_layout(self, tmp_path):
        path = write(tmp_path / "IOT_2022_ixi.txt", "\tA\tB\nA\t1\t2\nB\t3\t4\n")
        table = parse_mrio(spec_for(path, header_rows=1, region_row=0, sector_row=0, label_cols=1))
        assert list(table.index) == [(SINGLE_REGION, "A"), (SINGLE_REGION, "B")]
        assert table.to_dense().sum() == 10.0

    def test_small_chunks_give_same_table(self, fixtures_dir):
        path = fixtures_dir / "small_mrio.txt"
        whole = parse_mrio(spec_for(path, year=2011))
        chunked = parse_mrio(spec_for(path, year=2011, chunk_rows=1))
        np.testing.assert_array_equal(whole.to_dense(), chunked.to_dense())

    def test_cell_budget_gives_same_table(self, fixtures_dir):
        path = fixtures_dir / "small_mrio.txt"
        whole = parse_mrio(spec_for(path, year=2011))
        budgeted = parse_mrio(spec_for(path, year=2011, chunk_cells=5))
        np.testing.assert_array_equal(whole.to_dense(), budgeted.to_dense())

    def test_sum_matches_line_scan(self, fixtures_dir, dataset_dir):
        for path, year in [(fixtures_dir / "small_mrio.txt", 2011), (dataset_dir / "IOT_2022_ixi.txt", 2022)]:
            table = parse_mrio(spec_for(path, year=year))
            assert math.fsum(table.cells.data) == pytest.approx(scanned_total(path), rel=1e-12)

    def test_all_zero_file(self, tmp_path):
        path = write(tmp_path / "IOT_2022_ixi.txt", HEADER + "XX\tA\t0\t0\nXX\tB\t0.0\t-0\n")
        table = parse_mrio(spec_for(path))
        assert table.nnz == 0
        assert table.cells.shape == (2, 2)
        assert scanned_total(path) == 0.0

    @pytest.mark.parametrize("body", [
        "XX\tA\t0\t2\nXX\tB\t1\t0\t7\n",
        "XX\tA\t0\t2\t7\nXX\tB\t1\t0\n",
    ])
    def test_long_row_rejected(self, tmp_path, body):
        path = write(tmp_path / "IOT_2022_ixi.txt", HEADER + body)
        with pytest.raises(MalformedHeader):
            parse_mrio(spec_for(path))

    def test_invalid_utf8_rejected(self, tmp_path):
        path = tmp_path / "IOT_2022_ixi.txt"
        path.write_bytes(HEADER.encode("utf-8") + b"XX\tA\t0\t2\nXX\tB\t\xff\xfe\t0\n")
        with pytest.raises(UndecodableText) as excinfo:
            parse_mrio(spec_for(path))
        assert excinfo.value.path == str(path)
        assert excinfo.value.exit_code == 3

    def test_million_cells_parse_quickly(self, tmp_path):
        n = 1000
        rng = np.random.default_rng(7)
        dense = np.where(rng.random((n, n)) < 0.01, rng.integers(1, 1000, (n, n)), 0)
        lines = ["\t\t" + "\t".join(["R"] * n), "\t\t" + "\t".join(f"s{j}" for j in range(n))]
        lines += [f"R\ts{i}\t" + "\t".join(map(str, dense[i])) for i in range(n)]
        path = write(tmp_path / "IOT_2022_ixi.txt", "\n".join(lines) + "\n")

        started = time.perf_counter()
        table = parse_mrio(spec_for(path))
        assert time.perf_counter() - started < 10.0
        assert table.nnz == int(np.count_nonzero(dense))
        assert table.cells.sum() == pytest.approx(float(dense.sum()))

    def test_written_table_reads_back(self, tmp_path, table_2022):
        spec = spec_for(tmp_path / "IOT_2022_ixi.txt", year=2022)
        write_mrio(table_2022, spec)
        parsed = parse_mrio(spec)
        assert parsed.index == table_2022.index
        np.testing.assert_array_equal(parsed.to_dense(), table_2022.to_dense())

    def test_negative_cells_survive_round_trip(self, tmp_path):
        index = RegionSectorIndex.product(["NO", "US"], ["oil", "ict"])
        dense = np.array([
            [0.0, -1.25, 3.0, 0.0],
            [0.5, 0.0, 0.0, -0.001],
            [0.0, 0.0, 0.0, 0.0],
            [-7.0, 2.0, 0.1, 1e-7],
        ])
        spec = spec_for(tmp_path / "IOT_2015_ixi.txt")
        write_mrio(TransactionTable.from_dense(2015, index, dense), spec)
        parsed = parse_mrio(spec)
        np.testing.assert_array_equal(parsed.to_dense(), dense)
        assert parsed.meta.negative_cells == 3


class TestFileSpec:
    def test_rows_per_chunk_follow_cell_budget(self, tmp_path):
        spec = MrioFileSpec(path=tmp_path, chunk_rows=2000, chunk_cells=1_000_000)
        assert spec.rows_per_chunk(7989) == 125
        assert spec.rows_per_chunk(12) == 2000
        assert MrioFileSpec(path=tmp_path, chunk_cells=10).rows_per_chunk(7989) == 1

    def test_layout_validation(self, tmp_path):
        with pytest.raises(ValueError):
            MrioFileSpec(path=tmp_path, header_rows=2, sector_row=2)
        with pytest.raises(ValueError):
            MrioFileSpec(path=tmp_path, delimiter="::")
        with pytest.raises(ValueError):
            MrioFileSpec(path=tmp_path, delimiter=",", decimal_comma=True)

    def test_exiobase_three_header_rows(self, tmp_path):
        spec = MrioFileSpec(path=tmp_path, header_rows=3, region_row=0, sector_row=1)
        assert spec.header_rows == 3 and not spec.single_region

    def test_format_cell_is_positional(self):
        assert format_cell(1e-7) == "0.0000001"
        assert format_cell(2.0) == "2"
        assert format_cell(0.1) == "0.1"
        assert format_cell(2.5, decimal_comma=True) == "2,5"


class TestVectors:
    @pytest.fixture
    def index(self):
        return RegionSectorIndex.product(["XX"], ["A", "B"])

    def test_vector_aligned_to_index(self, fixtures_dir, index):
        vector = parse_region_sector_vector(fixtures_dir / "hand" / "total_output.csv", index)
        assert vector.values.tolist() == [2.0, 4.0]
        assert vector.missing == 0

    def test_missing_entries_default_to_zero(self, tmp_path, index):
        path = write(tmp_path / "demand.csv", "region,sector,value\nXX,B,3\n")
        vector = parse_region_sector_vector(path, index)
        assert vector.values.tolist() == [0.0, 3.0]
        assert vector.missing == 1

    def test_unknown_pair_strict_and_lenient(self, tmp_path, index):
        path = write(tmp_path / "demand.csv", "region,sector,value\nXX,A,1\nYY,A,5\n")
        with pytest.raises(UnknownRegionSector):
            parse_region_sector_vector(path, index, strict=True)
        vector = parse_region_sector_vector(path, index, strict=False)
        assert vector.unknown_rows == (("YY", "A"),)
        assert vector.values.tolist() == [1.0, 0.0]

    def test_duplicate_pair_rejected(self, tmp_path, index):
        path = write(tmp_path / "demand.csv", "region,sector,value\nXX,A,1\nXX,A,2\n")
        with pytest.raises(MalformedHeader):
            parse_region_sector_vector(path, index)

    def test_missing_column(self, tmp_path, index):
        path = write(tmp_path / "demand.csv", "region,value\nXX,1\n")
        with pytest.raises(MalformedHeader):
            parse_region_sector_vector(path, index)

    def test_non_numeric_value(self, tmp_path, index):
        path = write(tmp_path / "demand.csv", "region,sector,value\nXX,A,lots\n")
        with pytest.raises(NonNumericCell) as excinfo:
            parse_region_sector_vector(path, index)
        assert (excinfo.value.row, excinfo.value.col) == (2, 3)

    def test_extension_fixture(self, fixtures_dir):
        index = RegionSectorIndex.product(["DE", "JP"], ["Computer and related activities (72)", "Petroleum Refinery"])
        extension = parse_extension(fixtures_dir / "extension.csv", index)
        assert extension.values.tolist() == [12.5, 310.0, 9.0, 0.0]
        assert extension.missing == 1


class TestPrices:
    def test_price_fixture(self, fixtures_dir):
        prices = parse_price_series(fixtures_dir / "brent.csv")
        assert prices.name == "brent"
        assert prices.years == [2000, 2011, 2022]
        assert prices.get(2011) == 111.26
        assert prices.get(2005) is None

    def test_duplicate_year(self, tmp_path):
        path = write(tmp_path / "brent.csv", "year,price\n2000,28.5\n2000,30\n")
        with pytest.raises(DuplicateYear):
            parse_price_series(path)

    @pytest.mark.parametrize("price", ["0", "-3", "nan"])
    def test_non_positive_price(self, tmp_path, price):
        path = write(tmp_path / "brent.csv", f"year,price\n2000,{price}\n")
        with pytest.raises(NonPositivePrice):
            parse_price_series(path)

    def test_points_are_sorted(self):
        series = PriceSeries("wti", {2022: 94.9, 2000: 30.4})
        assert series.years == [2000, 2022]


class TestCache:
    def test_store_and_load(self, tmp_path, fixtures_dir):
        spec = spec_for(fixtures_dir / "small_mrio.txt", year=2011)
        table = parse_mrio(spec)
        cache = TableCache(tmp_path / "cache")
        cache.store(table, spec)
        cached = cache.load(spec, 2011)
        assert cached is not None
        assert cached.index == table.index
        assert cached.meta == table.meta
        np.testing.assert_array_equal(cached.to_dense(), table.to_dense())

    def test_changed_source_is_a_miss(self, tmp_path):
        path = write(tmp_path / "IOT_2022_ixi.txt", HEADER + "XX\tA\t0\t2\nXX\tB\t1\t0\n")
        spec = spec_for(path)
        cache = TableCache(tmp_path / "cache")
        cache.store(parse_mrio(spec), spec)
        write(path, HEADER + "XX\tA\t0\t3\nXX\tB\t1\t0\n")
        assert cache.load(spec, 2022) is None

    def test_changed_layout_is_a_miss(self, tmp_path, fixtures_dir):
        spec = spec_for(fixtures_dir / "hand" / "IOT_2022_ixi.txt")
        cache = TableCache(tmp_path / "cache")
        cache.store(parse_mrio(spec), spec)
        assert cache.load(spec.model_copy(update={"unit": "M$"}), 2022) is None

    def test_clear(self, tmp_path, fixtures_dir):
        spec = spec_for(fixtures_dir / "hand" / "IOT_2022_ixi.txt")
        cache = TableCache(tmp_path / "cache")
        cache.store(parse_mrio(spec), spec)
        assert cache.clear() == 2
        assert cache.load(spec, 2022) is None


class TestTableSet:
    def test_loads_every_year(self, dataset_dir):
        table_set = load_table_set(dataset_dir, spec_for(dataset_dir))
        assert table_set.years == sorted(DEFAULT_YEAR_SCALES)
        assert table_set.ok

    def test_missing_year_reported(self, dataset_dir):
        table_set = load_table_set(dataset_dir, spec_for(dataset_dir), years=[2000, 2005])
        assert table_set.years == [2000]
        assert isinstance(table_set.errors[2005], YearNotFound)

    def test_bad_file_does_not_stop_others(self, dataset_dir):
        write(dataset_dir / "IOT_2011_ixi.txt", HEADER + "XX\tA\tx\t2\nXX\tB\t1\t0\n")
        table_set = load_table_set(dataset_dir, spec_for(dataset_dir))
        assert table_set.years == [2000, 2022]
        assert isinstance(table_set.errors[2011], NonNumericCell)

    def test_undecodable_year_does_not_stop_others(self, dataset_dir):
        (dataset_dir / "IOT_2011_ixi.txt").write_bytes(HEADER.encode("utf-8") + b"XX\tA\t\xff\t2\nXX\tB\t1\t0\n")
        table_set = load_table_set(dataset_dir, spec_for(dataset_dir), years=[2000, 2011])
        assert table_set.years == [2000]
        assert isinstance(table_set.errors[2011], UndecodableText)

    def test_second_load_uses_cache(self, dataset_dir, tmp_path):
        cache = TableCache(tmp_path / "cache")
        first = load_table_set(dataset_dir, spec_for(dataset_dir), cache=cache)
        second = load_table_set(dataset_dir, spec_for(dataset_dir), cache=cache)
        assert first.cached == []
        assert second.cached == first.years
        for a, b in zip(first.tables, second.tables):
            np.testing.assert_array_equal(a.to_dense(), b.to_dense())

    def test_empty_directory(self, tmp_path):
        with pytest.raises(EmptyFile):
            load_table_set(tmp_path, spec_for(tmp_path))

    def test_missing_directory(self, tmp_path):
        with pytest.raises(FileNotFoundError):
            load_table_set(tmp_path / "nowhere")


class TestSynthetic:
    def test_design(self, generator, table_2022):
        assert len(generator.index) == 30
        assert table_2022.meta.negative_cells == 0

    def test_negative_adjustment(self):
        from ingest.synthetic import SyntheticTableGenerator

        table = SyntheticTableGenerator(negative_adjustment=5.0).generate(2000)
        assert table.meta.negative_cells == 3

    def test_dataset_carries_concordance(self, dataset_dir):
        assert (dataset_dir / "concordance.yaml").is_file()
        assert sorted(p.name for p in dataset_dir.glob("IOT_*_ixi.txt")) == [
            "IOT_2000_ixi.txt", "IOT_2011_ixi.txt", "IOT_2022_ixi.txt",
        ]
