#!/usr/bin/env python
"""
Case-study check script for ictog.

Runs every shipped scenario (or the given files), compares each figure with
the published one and writes the comparison as JSON and CSV.
Usage: python scripts/check_case_studies.py --output-dir output/cases
"""

import argparse
import json
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

from tqdm import tqdm

from emissions.estimators import run_scenario
from emissions.scenarios import SHIPPED_SCENARIOS, load_scenario
from report.csv_io import write_csv
from utils.file_utils import ensure_directory
from utils.logging_utils import setup_logger

logger = setup_logger(name="case_study_check", log_file="logs/case_study_check.log")

COMPARISON_SCHEMA = (
    ("scenario", str),
    ("figure", str),
    ("expected", str),
    ("actual", str),
    ("ok", str),
)


def parse_arguments():
    """Parse command line arguments."""
    parser = argparse.ArgumentParser(description="Compare case-study estimates with published figures")
    parser.add_argument(
        "scenarios",
        nargs="*",
        help="Scenario files or shipped names (default: all shipped scenarios)"
    )
    parser.add_argument(
        "--output-dir",
        type=str,
        default="output/cases",
        help="Directory receiving case_check.json and case_check.csv"
    )
    return parser.parse_args()


def main():
    """Main entry point."""
    args = parse_arguments()
    start_time = time.time()
    names = args.scenarios or list(SHIPPED_SCENARIOS)

    report = {}
    rows = []
    for name in tqdm(names, desc="Checking scenarios"):
        scenario = load_scenario(name)
        result = run_scenario(scenario)
        comparison = result.check(scenario.published)
        report[scenario.name] = {"headline": result.headline, "figures": comparison}
        for key, item in comparison.items():
            rows.append({"scenario": scenario.name, "figure": key, "expected": item["expected"],
                         "actual": item["actual"], "ok": str(item["ok"]).lower()})
            if not item["ok"]:
                logger.error(f"{scenario.name}.{key}: expected {item['expected']}, got {item['actual']}")

    output_dir = ensure_directory(args.output_dir)
    with open(output_dir / "case_check.json", "w", encoding="utf-8") as f:
        json.dump(report, f, indent=2, sort_keys=True)
    write_csv(rows, COMPARISON_SCHEMA, output_dir / "case_check.csv")

    failed = [row for row in rows if row["ok"] != "true"]
    logger.info(f"Checked {len(rows)} figures of {len(names)} scenarios in {time.time() - start_time:.2f} seconds")
    logger.info(f"Matching: {len(rows) - len(failed)}")
    logger.info(f"Differing: {len(failed)}")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
