# ictog/concordance/loader.py
"""
Concordance files: the mapping from dataset sector labels to analysis groups.
"""

import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, Iterable, List, Literal, Mapping, Optional, Sequence, Tuple, Union

import yaml
from pydantic import BaseModel, Field, ValidationError, field_validator

from mrio_core.exceptions import DuplicateGroup, SchemaError, UnknownGroup
from mrio_core.groups import SectorGroup
from utils.file_utils import ensure_directory
from utils.text_utils import normalize_label

logger = logging.getLogger(__name__)

DEFAULT_CONCORDANCE_PATH = Path(__file__).parent / "default_concordance.yaml"


class GroupEntry(BaseModel):
    """One group record of a concordance file."""

    name: str = Field(..., min_length=1)
    description: str = ""
    regions: Union[Literal["all"], List[str]] = "all"
    labels: List[str]

    @field_validator("labels")
    @classmethod
    def _labels_not_empty(cls, labels: List[str]) -> List[str]:
        if not labels:
            raise ValueError("label list is empty")
        normalized = [normalize_label(label) for label in labels]
        if any(not label for label in normalized):
            raise ValueError("blank sector label")
        return normalized

    @field_validator("regions")
    @classmethod
    def _regions_not_empty(cls, regions):
        if isinstance(regions, list) and not regions:
            raise ValueError("explicit region list is empty; use 'all'")
        return regions


class ConcordanceFile(BaseModel):
    version: int = 1
    groups: List[GroupEntry] = Field(..., min_length=1)


@dataclass(frozen=True)
class ConcordanceConfig:
    """Validated concordance: ordered sector groups keyed by name."""

    groups: Dict[str, SectorGroup]
    source: str = ""
    region_scope: Dict[str, Optional[Tuple[str, ...]]] = field(default_factory=dict)

    @property
    def names(self) -> List[str]:
        return list(self.groups)

    def group(self, name: str) -> SectorGroup:
        """Group by name; raises UnknownGroup listing the known names."""
        try:
            return self.groups[name]
        except KeyError:
            raise UnknownGroup(name, self.names) from None

    def labels(self, name: str) -> Tuple[str, ...]:
        return self.group(name).labels


def _build(document: ConcordanceFile, source: str) -> ConcordanceConfig:
    groups: Dict[str, SectorGroup] = {}
    scopes: Dict[str, Optional[Tuple[str, ...]]] = {}
    for entry in document.groups:
        if entry.name in groups:
            raise DuplicateGroup(f"{source}: group {entry.name!r} defined twice")
        if len(set(entry.labels)) != len(entry.labels):
            logger.warning(f"{source}: group {entry.name} lists a label more than once")
        regions = None if entry.regions == "all" else tuple(entry.regions)
        groups[entry.name] = SectorGroup.of_labels(
            entry.name, dict.fromkeys(entry.labels), regions, entry.description
        )
        scopes[entry.name] = regions
    return ConcordanceConfig(groups=groups, source=source, region_scope=scopes)


def parse_concordance(data: Mapping, source: str = "<memory>") -> ConcordanceConfig:
    """Validate an already-loaded concordance document."""
    if not isinstance(data, Mapping):
        raise SchemaError(f"{source}: top level must be a mapping with a 'groups' list")
    try:
        document = ConcordanceFile.model_validate(data)
    except ValidationError as e:
        raise SchemaError(f"{source}: {e}") from e
    return _build(document, source)


def load_concordance(path: Optional[Union[str, Path]] = None) -> ConcordanceConfig:
    """
    Load and validate a concordance file.

    Args:
        path: YAML file; the shipped default when None

    Returns:
        ConcordanceConfig with groups in file order

    Raises:
        SchemaError: unreadable YAML or a record that breaks the schema
        DuplicateGroup: two groups share a name
    """
    path = Path(path) if path else DEFAULT_CONCORDANCE_PATH
    with open(path, "r", encoding="utf-8") as f:
        try:
            data = yaml.safe_load(f)
        except yaml.YAMLError as e:
            raise SchemaError(f"{path}: invalid YAML: {e}") from e

    config = parse_concordance(data, str(path))
    logger.info(f"Loaded concordance {path.name} with groups {', '.join(config.names)}")
    return config


def write_concordance(
    groups: Mapping[str, Sequence[str]],
    path: Union[str, Path],
    regions: Optional[Mapping[str, Iterable[str]]] = None,
) -> Path:
    """
    Write a concordance file.

    Args:
        groups: Group name -> sector labels
        path: Target YAML file
        regions: Optional group name -> explicit region list

    Returns:
        Path of the written file
    """
    regions = regions or {}
    document = {
        "version": 1,
        "groups": [
            {
                "name": name,
                "regions": list(regions[name]) if name in regions else "all",
                "labels": list(labels),
            }
            for name, labels in groups.items()
        ],
    }
    parse_concordance(document, str(path))

    path = Path(path)
    ensure_directory(path.parent)
    with open(path, "w", encoding="utf-8") as f:
        yaml.safe_dump(document, f, sort_keys=False, allow_unicode=True)
    return path
