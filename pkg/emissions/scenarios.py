# ictog/emissions/scenarios.py
"""
Scenario files: a tagged case study with the inputs of one estimator.

Quantities are read as ``Decimal`` so that the text in the file (``0.15``,
``431.87``) is what the exact arithmetic sees.
"""

import logging
from decimal import Decimal
from pathlib import Path
from typing import Annotated, Dict, List, Literal, Optional, Tuple, Union

import yaml
from pydantic import BaseModel, Field, ValidationError, field_validator, model_validator

from mrio_core.exceptions import SchemaError
from .calculations import DEFAULT_KG_PER_BARREL
from .taxonomy import TaxonomyTags, classify_scenario

logger = logging.getLogger(__name__)

SCENARIO_DIR = Path(__file__).parent / "data" / "scenarios"
SHIPPED_SCENARIOS = ("xto_microsoft", "valero_aveva", "woodmac_wedge")

DEFAULT_EF = Decimal(DEFAULT_KG_PER_BARREL.numerator) / Decimal(DEFAULT_KG_PER_BARREL.denominator)


def _exact(value):
    """Floats parsed by YAML go through their text so 0.15 stays 0.15."""
    if isinstance(value, float):
        return Decimal(repr(value))
    if isinstance(value, (list, tuple)):
        return [_exact(v) for v in value]
    if isinstance(value, dict):
        return {k: _exact(v) for k, v in value.items()}
    return value


class _Inputs(BaseModel):
    model_config = {"extra": "forbid"}

    @model_validator(mode="before")
    @classmethod
    def _floats_as_text(cls, data):
        if not isinstance(data, dict):
            return data
        return {k: v if k == "kind" else _exact(v) for k, v in data.items()}


class RampInputs(_Inputs):
    kind: Literal["ramp"]
    start_year: int
    end_year: int
    final_rate: Decimal
    ramp_origin_rate: Decimal = Decimal(0)
    downtime_fraction: Decimal = Decimal(0)
    emission_factor: Decimal = DEFAULT_EF
    headline_year: Optional[int] = None
    reference_footprints: Dict[str, Decimal] = {}


class MonetaryInputs(_Inputs):
    kind: Literal["monetary"]
    emissions_t: Decimal
    profit: Decimal
    currency: str = "$"
    year: Optional[int] = None
    scopes: List[str] = []
    savings_ranges: Dict[str, Tuple[Decimal, Decimal]] = Field(..., min_length=1)


class WedgeInputs(_Inputs):
    kind: Literal["wedge"]
    total_barrels: Tuple[Decimal, Decimal]
    horizon_years: int = 26
    emission_factor: Decimal = DEFAULT_EF


EstimatorInputs = Annotated[Union[RampInputs, MonetaryInputs, WedgeInputs], Field(discriminator="kind")]


class ScenarioFile(BaseModel):
    model_config = {"extra": "forbid"}

    name: str = Field(..., min_length=1)
    title: str = ""
    sources: List[str] = []
    taxonomy: Dict[str, Union[str, List[str]]] = {}
    estimator: EstimatorInputs
    published: Dict[str, str] = {}

    @field_validator("published", mode="before")
    @classmethod
    def _published_as_text(cls, value):
        return {k: str(v) for k, v in (value or {}).items()}


class CaseScenario(BaseModel):
    """A validated scenario: tags checked against the vocabulary."""

    model_config = {"arbitrary_types_allowed": True}

    name: str
    title: str
    sources: List[str]
    tags: TaxonomyTags
    estimator: EstimatorInputs
    published: Dict[str, str]
    path: Optional[str] = None


def parse_scenario(data, source: str = "<memory>") -> CaseScenario:
    """
    Validate a scenario document.

    Raises:
        SchemaError: the document breaks the schema
        UnknownTag: a taxonomy tag is outside the vocabulary
    """
    if not isinstance(data, dict):
        raise SchemaError(f"{source}: scenario must be a mapping")
    try:
        document = ScenarioFile.model_validate(data)
    except ValidationError as e:
        raise SchemaError(f"{source}: {e}") from e

    return CaseScenario(
        name=document.name,
        title=document.title,
        sources=document.sources,
        tags=classify_scenario(document.taxonomy),
        estimator=document.estimator,
        published=document.published,
        path=source,
    )


def scenario_path(name_or_path: Union[str, Path]) -> Path:
    """Path of a scenario file, or of a shipped scenario given by name."""
    path = Path(name_or_path)
    if path.suffix in (".yaml", ".yml") or path.exists():
        return path
    shipped = SCENARIO_DIR / f"{name_or_path}.yaml"
    if shipped.exists():
        return shipped
    raise FileNotFoundError(
        f"No scenario file {name_or_path!r}; shipped scenarios: {', '.join(SHIPPED_SCENARIOS)}"
    )


def load_scenario(name_or_path: Union[str, Path]) -> CaseScenario:
    """
    Load a scenario file, or a shipped scenario by name (e.g. ``xto_microsoft``).

    Raises:
        SchemaError: invalid YAML or schema
        UnknownTag: a taxonomy tag is outside the vocabulary
    """
    path = scenario_path(name_or_path)
    with open(path, "r", encoding="utf-8") as f:
        try:
            data = yaml.safe_load(f)
        except yaml.YAMLError as e:
            raise SchemaError(f"{path}: invalid YAML: {e}") from e
    scenario = parse_scenario(data, str(path))
    logger.info(f"Loaded scenario {scenario.name} ({scenario.estimator.kind})")
    return scenario


def shipped_scenarios() -> List[CaseScenario]:
    return [load_scenario(name) for name in SHIPPED_SCENARIOS]
