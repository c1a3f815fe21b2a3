# ictog/emissions/taxonomy.py
"""
Case-study tagging vocabulary and the activity/function catalog.
"""

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Dict, List, Mapping, Optional, Sequence, Tuple, Union

import yaml
from pydantic import BaseModel, ValidationError

from mrio_core.exceptions import SchemaError, UnknownTag
from utils.text_utils import closest_match, normalize_term

logger = logging.getLogger(__name__)

DEFAULT_TAXONOMY_PATH = Path(__file__).parent / "data" / "taxonomy.yaml"

TAG_FIELDS = ("activity", "sub_activity", "function", "services", "effects")


class CatalogRow(BaseModel):
    activity: str
    sub_activity: Optional[str] = None
    function: str
    services: List[str]
    effects: List[str]


class TaxonomyFile(BaseModel):
    vocabulary: Dict[str, Dict[str, List[str]]]
    catalog: List[CatalogRow] = []


@dataclass(frozen=True)
class TaxonomyTags:
    """Validated tags of one case, canonical terms only."""

    activity: Tuple[str, ...] = ()
    sub_activity: Tuple[str, ...] = ()
    function: Tuple[str, ...] = ()
    services: Tuple[str, ...] = ()
    effects: Tuple[str, ...] = ()

    def to_dict(self) -> Dict[str, List[str]]:
        return {name: list(getattr(self, name)) for name in TAG_FIELDS}


@dataclass(frozen=True)
class Taxonomy:
    """Canonical terms per field, each reachable through its aliases."""

    terms: Dict[str, Dict[str, str]]
    catalog: Tuple[CatalogRow, ...] = field(default_factory=tuple)

    def canonical(self, field_name: str, tag: str) -> str:
        """
        Canonical term for a tag.

        Raises:
            UnknownTag: the tag is not a term or alias of the field (carries the nearest term)
        """
        lookup = self.terms.get(field_name)
        if lookup is None:
            raise SchemaError(f"Unknown tag field {field_name!r}; use one of {', '.join(TAG_FIELDS)}")
        key = normalize_term(tag)
        if key in lookup:
            return lookup[key]
        nearest = lookup[closest_match(key, lookup)] if lookup else None
        raise UnknownTag(field_name, tag, nearest)

    def vocabulary(self, field_name: str) -> List[str]:
        return list(dict.fromkeys(self.terms[field_name].values()))


def _build(document: TaxonomyFile) -> Taxonomy:
    terms: Dict[str, Dict[str, str]] = {}
    for field_name in TAG_FIELDS:
        lookup: Dict[str, str] = {}
        for canonical, aliases in document.vocabulary.get(field_name, {}).items():
            for spelling in [canonical, *aliases]:
                lookup[normalize_term(spelling)] = canonical
        terms[field_name] = lookup
    taxonomy = Taxonomy(terms, tuple(document.catalog))

    for row in document.catalog:
        for field_name in TAG_FIELDS:
            value = getattr(row, field_name)
            for tag in ([value] if isinstance(value, str) else value or []):
                taxonomy.canonical(field_name, tag)
    return taxonomy


@lru_cache(maxsize=4)
def load_taxonomy(path: Optional[Union[str, Path]] = None) -> Taxonomy:
    """
    Load a taxonomy file (the shipped one by default).

    Raises:
        SchemaError: unreadable YAML or a file that breaks the schema
    """
    path = Path(path) if path else DEFAULT_TAXONOMY_PATH
    with open(path, "r", encoding="utf-8") as f:
        try:
            data = yaml.safe_load(f)
        except yaml.YAMLError as e:
            raise SchemaError(f"{path}: invalid YAML: {e}") from e
    try:
        document = TaxonomyFile.model_validate(data)
    except ValidationError as e:
        raise SchemaError(f"{path}: {e}") from e
    return _build(document)


def classify_scenario(
    tags: Mapping[str, Union[str, Sequence[str]]],
    taxonomy: Optional[Taxonomy] = None,
) -> TaxonomyTags:
    """
    Validate case tags against the vocabulary.

    Args:
        tags: Field -> tag or list of tags; fields are activity, sub_activity,
            function, services, effects
        taxonomy: Vocabulary (the shipped one when None)

    Returns:
        TaxonomyTags with canonical terms, order kept, duplicates dropped

    Raises:
        UnknownTag: a tag is outside the vocabulary
        SchemaError: an unknown field name
    """
    taxonomy = taxonomy or load_taxonomy()
    validated: Dict[str, Tuple[str, ...]] = {}
    for field_name, values in tags.items():
        if isinstance(values, str):
            values = [values]
        validated[field_name] = tuple(dict.fromkeys(
            taxonomy.canonical(field_name, value) for value in (values or [])
        ))
    return TaxonomyTags(**validated)


def catalog_rows(taxonomy: Optional[Taxonomy] = None, **filters: str) -> List[CatalogRow]:
    """
    Catalog rows matching every given filter.

    Filters are field names with one tag each (aliases allowed), e.g.
    ``catalog_rows(function="Predictive maintenance", services="UAV")``.
    """
    taxonomy = taxonomy or load_taxonomy()
    wanted = {name: taxonomy.canonical(name, value) for name, value in filters.items()}

    def matches(row: CatalogRow) -> bool:
        for name, term in wanted.items():
            value = getattr(row, name)
            if term not in ([value] if isinstance(value, str) or value is None else value):
                return False
        return True

    return [row for row in taxonomy.catalog if matches(row)]
