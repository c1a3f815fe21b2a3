# ictog/tests/test_concordance.py
import pytest

from concordance.coverage import validate_against
from concordance.loader import (
    DEFAULT_CONCORDANCE_PATH,
    load_concordance,
    parse_concordance,
    write_concordance,
)
from mrio_core.exceptions import DuplicateGroup, SchemaError, UnknownGroup
from mrio_core.tables import RegionSectorIndex
from utils.text_utils import closest_match, nearest_matches


def document(*groups):
    return {"version": 1, "groups": list(groups)}


class TestDefaultConcordance:
    def test_groups_in_file_order(self):
        config = load_concordance()
        assert config.names == ["ICT", "OG", "RN"]
        assert config.source == str(DEFAULT_CONCORDANCE_PATH)

    def test_labels_match_golden_list(self, golden_dir):
        config = load_concordance()
        golden = (golden_dir / "table_labels.txt").read_text(encoding="utf-8").splitlines()
        labels = [label for name in config.names for label in config.labels(name)]
        assert labels == golden

    def test_group_sizes(self):
        config = load_concordance()
        assert [len(config.labels(name)) for name in config.names] == [5, 7, 7]

    def test_coal_not_in_og(self):
        labels = load_concordance().labels("OG")
        assert not any("coal" in label.lower() for label in labels)

    def test_all_groups_span_all_regions(self):
        config = load_concordance()
        assert all(scope is None for scope in config.region_scope.values())

    def test_unknown_group(self):
        with pytest.raises(UnknownGroup) as excinfo:
            load_concordance().group("ENERGY")
        assert excinfo.value.known == ["ICT", "OG", "RN"]


class TestParseConcordance:
    def test_region_subset(self):
        config = parse_concordance(document(
            {"name": "OG", "regions": ["US", "CN"], "labels": ["Petroleum Refinery"]},
        ))
        assert config.region_scope["OG"] == ("US", "CN")
        assert config.group("OG").selectors[0].regions == frozenset({"US", "CN"})

    def test_duplicate_group(self):
        with pytest.raises(DuplicateGroup):
            parse_concordance(document(
                {"name": "OG", "labels": ["Petroleum Refinery"]},
                {"name": "OG", "labels": ["Production of electricity by gas"]},
            ))

    @pytest.mark.parametrize("group", [
        {"name": "OG", "labels": []},
        {"name": "", "labels": ["Petroleum Refinery"]},
        {"name": "OG", "labels": ["   "]},
        {"name": "OG", "regions": [], "labels": ["Petroleum Refinery"]},
        {"name": "OG"},
    ])
    def test_schema_violations(self, group):
        with pytest.raises(SchemaError):
            parse_concordance(document(group))

    def test_top_level_must_be_mapping(self):
        with pytest.raises(SchemaError):
            parse_concordance(["ICT"])

    def test_no_groups(self):
        with pytest.raises(SchemaError):
            parse_concordance({"groups": []})

    def test_labels_are_normalized(self):
        config = parse_concordance(document({"name": "OG", "labels": ["  Petroleum   Refinery "]}))
        assert config.labels("OG") == ("Petroleum Refinery",)

    def test_invalid_yaml(self, tmp_path):
        path = tmp_path / "broken.yaml"
        path.write_text("groups: [\n", encoding="utf-8")
        with pytest.raises(SchemaError):
            load_concordance(path)


class TestWriteConcordance:
    def test_written_file_loads(self, tmp_path):
        path = write_concordance(
            {"ICT": ["Post and telecommunications (64)"], "OG": ["Petroleum Refinery"]},
            tmp_path / "c.yaml",
            regions={"OG": ["NO"]},
        )
        config = load_concordance(path)
        assert config.names == ["ICT", "OG"]
        assert config.region_scope == {"ICT": None, "OG": ("NO",)}

    def test_invalid_groups_not_written(self, tmp_path):
        with pytest.raises(SchemaError):
            write_concordance({"ICT": []}, tmp_path / "c.yaml")
        assert not (tmp_path / "c.yaml").exists()


class TestCoverage:
    def test_default_concordance_on_synthetic_index(self, generator):
        report = validate_against(load_concordance(), generator.index)
        assert report.counts["ICT"]["Post and telecommunications (64)"] == 3
        assert report.matched_positions("ICT") == 15
        assert report.matched_positions("OG") == 6
        assert ("OG", "Petroleum Refinery") not in report.unmatched
        assert ("OG", "Production of electricity by gas") in report.unmatched
        assert not report.all_matched

    def test_suggestions_are_informational(self):
        index = RegionSectorIndex.product(["NO"], ["Petroleum Refinery", "Petroleum Refineries"])
        config = parse_concordance(document({"name": "OG", "labels": ["Petroleum Refinerie"]}))
        report = validate_against(config, index)
        assert report.unmatched == [("OG", "Petroleum Refinerie")]
        assert report.suggestions["Petroleum Refinerie"] == ["Petroleum Refineries", "Petroleum Refinery"]
        assert config.labels("OG") == ("Petroleum Refinerie",)

    def test_dataset_concordance_fully_matches(self, dataset_dir, generator):
        report = validate_against(load_concordance(dataset_dir / "concordance.yaml"), generator.index)
        assert report.all_matched
        assert report.to_dict()["unmatched"] == []

    def test_every_default_label_matched(self, golden_dir):
        labels = (golden_dir / "table_labels.txt").read_text(encoding="utf-8").splitlines()
        report = validate_against(load_concordance(), RegionSectorIndex.product(["DE", "NO"], labels))
        assert len(labels) == 19
        assert report.all_matched
        assert all(hits == 2 for counts in report.counts.values() for hits in counts.values())

    def test_one_missing_label_is_the_only_unmatched(self, golden_dir):
        labels = (golden_dir / "table_labels.txt").read_text(encoding="utf-8").splitlines()
        present = [label for label in labels if label != "Petroleum Refinery"]
        report = validate_against(load_concordance(), RegionSectorIndex.product(["DE"], present))
        assert report.unmatched == [("OG", "Petroleum Refinery")]
        assert report.counts["OG"]["Petroleum Refinery"] == 0

    def test_empty_index_leaves_every_label_unmatched(self):
        config = load_concordance()
        report = validate_against(config, RegionSectorIndex(()))
        assert len(report.unmatched) == 19
        assert report.suggestions == {}
        assert all(report.matched_positions(name) == 0 for name in config.names)


class TestSuggestions:
    def test_nearest_matches_closest_first_within_cutoff(self):
        known = ["Petroleum Refinery", "Petroleum Refineries", "Mining of coal", "Petroleum Refinery"]
        assert nearest_matches("Petroleum Refinerie", known) == ["Petroleum Refineries", "Petroleum Refinery"]
        assert nearest_matches("Petroleum Refinerie", known, max_distance=1) == ["Petroleum Refineries"]
        assert nearest_matches("Uranium", known) == []
        assert nearest_matches("Uranium", []) == []

    def test_closest_match_breaks_ties_by_name(self):
        assert closest_match("cat", ["hat", "bat", "horse"]) == "bat"
        assert closest_match("Hydr", ["Wind", "Hydro"]) == "Hydro"
