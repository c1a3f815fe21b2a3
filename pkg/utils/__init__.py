"""
Utilities package for ictog
"""

from .file_utils import (
    ensure_directory,
    get_file_hash,
    year_pattern_regex,
    year_from_filename,
    list_files_by_year,
    get_file_size,
    get_file_size_human_readable,
    list_output_files,
)

from .text_utils import (
    normalize_label,
    normalize_term,
    nearest_matches,
    closest_match,
)

from .logging_utils import (
    setup_logger,
    ContextAdapter,
    create_context_logger,
)

__all__ = [
    # File utilities
    "ensure_directory",
    "get_file_hash",
    "year_pattern_regex",
    "year_from_filename",
    "list_files_by_year",
    "get_file_size",
    "get_file_size_human_readable",
    "list_output_files",

    # Text utilities
    "normalize_label",
    "normalize_term",
    "nearest_matches",
    "closest_match",

    # Logging utilities
    "setup_logger",
    "ContextAdapter",
    "create_context_logger",
]
