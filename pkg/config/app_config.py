# ictog/config/app_config.py
from functools import lru_cache
from typing import Optional

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

APP_VERSION = "0.3.0"


class IngestConfig(BaseSettings):
    delimiter: str = Field("\t", description="Cell delimiter of transaction files")
    header_rows: int = Field(2, description="Number of header rows above the matrix")
    region_row: int = Field(0, description="Header row carrying region codes")
    sector_row: int = Field(1, description="Header row carrying sector labels")
    label_cols: int = Field(2, description="Number of label columns left of the matrix")
    unit: str = Field("M€", description="Unit tag attached to parsed tables")
    decimal_comma: bool = Field(False, description="Cells use ',' as decimal separator")
    file_pattern: str = Field("IOT_{year}_ixi.txt", description="File name pattern with a {year} placeholder")
    max_workers: int = Field(4, description="Concurrent per-year parse jobs")
    chunk_rows: int = Field(2000, description="Upper bound on rows read per streaming chunk")
    chunk_cells: int = Field(1_000_000, description="Cell budget per streaming chunk; wide tables get fewer rows")

    model_config = SettingsConfigDict(env_prefix="INGEST_", env_file=".env", extra="ignore")


class SolverConfig(BaseSettings):
    method: str = Field("iterative", description="Leontief solver (iterative, direct)")
    tolerance: float = Field(1e-10, description="Successive-iterate delta relative to ||y||inf")
    max_iterations: int = Field(10000, description="Iteration cap for the iterative solver")
    residual_tolerance: float = Field(1e-8, description="Accepted residual relative to ||y||inf")
    fallback: bool = Field(True, description="Fall back to sparse LU when iteration stalls")
    divergence_window: int = Field(50, description="Consecutive growing deltas that mean divergence")

    model_config = SettingsConfigDict(env_prefix="SOLVER_", env_file=".env", extra="ignore")


class ReportConfig(BaseSettings):
    chart_width: int = Field(800, description="SVG chart width in px")
    chart_height: int = Field(480, description="SVG chart height in px")
    precision: int = Field(2, description="Decimals for SVG coordinates")

    model_config = SettingsConfigDict(env_prefix="REPORT_", env_file=".env", extra="ignore")


class AppConfig(BaseSettings):
    app_name: str = Field("ictog", description="Application name")
    debug: bool = Field(False, description="Debug mode")
    log_level: str = Field("INFO", description="Logging level")
    dataset_dir: Optional[str] = Field(None, description="Default directory of transaction files")
    output_dir: str = Field("./output", description="Directory receiving result files")
    cache_dir: str = Field("./cache", description="Directory for parsed-table caches")
    concordance_path: Optional[str] = Field(None, description="Concordance file; shipped default when unset")
    strict: bool = Field(True, description="Fail on selectors that match nothing")

    # Sub-configurations
    ingest: IngestConfig = Field(default_factory=IngestConfig)
    solver: SolverConfig = Field(default_factory=SolverConfig)
    report: ReportConfig = Field(default_factory=ReportConfig)

    model_config = SettingsConfigDict(env_prefix="MRIO_", env_file=".env", extra="ignore")


@lru_cache(maxsize=1)
def get_config() -> AppConfig:
    """Get the application configuration."""
    return AppConfig()
