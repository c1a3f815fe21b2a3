# ictog/config/__init__.py
"""
Configuration package for ictog.

This package contains configuration modules for ictog, including application
settings (ingest layout, solver tolerances, report geometry) and logging
configuration.
"""

from .app_config import (
    get_config,
    AppConfig,
    IngestConfig,
    SolverConfig,
    ReportConfig,
    APP_VERSION,
)
from .logging_config import get_logging_config, setup_logging, get_logger, LoggingConfig

__all__ = [
    'get_config',
    'get_logging_config',
    'setup_logging',
    'get_logger',
    'AppConfig',
    'IngestConfig',
    'SolverConfig',
    'ReportConfig',
    'LoggingConfig',
    'APP_VERSION',
]
