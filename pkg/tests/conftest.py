# ictog/tests/conftest.py
import os

os.environ.setdefault("LOG_LOG_TO_FILE", "false")

import logging
from pathlib import Path

import pytest

from ingest.mrio_reader import MrioFileSpec
from ingest.synthetic import DEFAULT_YEAR_SCALES, SyntheticTableGenerator
from mrio_core.groups import SectorGroup

FIXTURES = Path(__file__).parent / "fixtures"
GOLDEN = Path(__file__).parent / "golden"


@pytest.fixture(autouse=True)
def restore_root_logging():
    """Drop the handlers ``setup_logging`` installs during CLI runs."""
    root = logging.getLogger()
    level = root.level
    yield
    for handler in root.handlers[:]:
        if type(handler) is logging.StreamHandler:
            root.removeHandler(handler)
    root.setLevel(level)


@pytest.fixture(scope="session")
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture(scope="session")
def golden_dir() -> Path:
    return GOLDEN


@pytest.fixture(scope="session")
def generator() -> SyntheticTableGenerator:
    return SyntheticTableGenerator()


@pytest.fixture(scope="session")
def synthetic_tables(generator):
    return generator.generate_series(DEFAULT_YEAR_SCALES)


@pytest.fixture(scope="session")
def table_2022(synthetic_tables):
    return synthetic_tables[-1]


@pytest.fixture(scope="session")
def groups(generator):
    return {name: SectorGroup.of_labels(name, labels) for name, labels in generator.group_labels().items()}


@pytest.fixture
def dataset_dir(tmp_path, generator) -> Path:
    directory = tmp_path / "dataset"
    spec = MrioFileSpec(path=directory)
    generator.write_dataset(directory, DEFAULT_YEAR_SCALES, spec)
    return directory
