#!/usr/bin/env python
"""
Synthetic dataset script for ictog.

Writes one designed transaction table per year plus the matching
concordance.yaml, so every command can be tried without EXIOBASE files.
Usage: python scripts/make_synthetic_dataset.py --output-dir data/synthetic --years 2000-2022
"""

import argparse
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

from tqdm import tqdm

from ingest.mrio_reader import MrioFileSpec
from ingest.synthetic import DEFAULT_YEAR_SCALES, SyntheticTableGenerator
from main import parse_years
from utils.file_utils import get_file_size_human_readable
from utils.logging_utils import setup_logger

logger = setup_logger(name="synthetic_dataset", log_file="logs/synthetic_dataset.log")


def parse_arguments():
    """Parse command line arguments."""
    parser = argparse.ArgumentParser(description="Write a designed multi-year MRIO dataset")
    parser.add_argument(
        "--output-dir",
        type=str,
        required=True,
        help="Directory receiving the per-year files"
    )
    parser.add_argument(
        "--years",
        type=parse_years,
        help="Years to write, e.g. 2000-2022 (default: 2000, 2011, 2022)"
    )
    parser.add_argument(
        "--growth",
        type=float,
        default=0.05,
        help="Yearly growth of the flows when --years is given"
    )
    parser.add_argument(
        "--pattern",
        type=str,
        default="IOT_{year}_ixi.txt",
        help="File name pattern with a {year} placeholder"
    )
    parser.add_argument(
        "--negative-adjustment",
        type=float,
        default=0.0,
        help="Inventory-style negative cell added to every table (0 for none)"
    )
    return parser.parse_args()


def year_scales(years, growth: float):
    """Scale factors compounding ``growth`` from the first year."""
    if not years:
        return dict(DEFAULT_YEAR_SCALES)
    first = years[0]
    return {year: round((1 + growth) ** (year - first), 6) for year in years}


def main():
    """Main entry point."""
    args = parse_arguments()
    start_time = time.time()

    scales = year_scales(args.years, args.growth)
    generator = SyntheticTableGenerator(negative_adjustment=args.negative_adjustment)
    spec = MrioFileSpec(path=Path(args.output_dir), file_pattern=args.pattern)

    logger.info(f"Writing {len(scales)} synthetic tables to {args.output_dir}")
    written = {}
    for year, scale in tqdm(sorted(scales.items()), desc="Writing tables"):
        written.update(generator.write_dataset(args.output_dir, {year: scale}, spec))

    for year, path in sorted(written.items()):
        logger.info(f"{year}: {path.name} ({get_file_size_human_readable(path)})")
    logger.info(f"Synthetic dataset complete in {time.time() - start_time:.2f} seconds")


if __name__ == "__main__":
    main()
