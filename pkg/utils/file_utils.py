"""
File handling utilities for ictog
"""

import re
import hashlib
import logging
from pathlib import Path
from typing import Dict, List, Optional, Union

logger = logging.getLogger(__name__)

YEAR_PLACEHOLDER = "{year}"


def ensure_directory(directory_path: Union[str, Path]) -> Path:
    """
    Ensure a directory exists, creating it if necessary.

    Args:
        directory_path: Path to the directory

    Returns:
        Path object for the directory
    """
    path = Path(directory_path)
    path.mkdir(parents=True, exist_ok=True)
    return path


def get_file_hash(file_path: Union[str, Path]) -> str:
    """
    Calculate SHA-256 hash of a file.

    Args:
        file_path: Path to the file

    Returns:
        SHA-256 hash as a hexadecimal string
    """
    sha256_hash = hashlib.sha256()

    with open(file_path, "rb") as f:
        for byte_block in iter(lambda: f.read(1 << 20), b""):
            sha256_hash.update(byte_block)

    return sha256_hash.hexdigest()


def year_pattern_regex(pattern: str) -> re.Pattern:
    """
    Compile a file-name pattern holding a ``{year}`` placeholder into a regex.

    Args:
        pattern: File name pattern, e.g. ``IOT_{year}_ixi.txt``

    Returns:
        Compiled regex with a ``year`` group
    """
    if YEAR_PLACEHOLDER not in pattern:
        raise ValueError(f"File pattern {pattern!r} has no {YEAR_PLACEHOLDER} placeholder")
    head, _, tail = pattern.partition(YEAR_PLACEHOLDER)
    return re.compile(f"^{re.escape(head)}(?P<year>\\d{{4}}){re.escape(tail)}$")


def year_from_filename(file_name: str, pattern: str) -> Optional[int]:
    """
    Extract the year from a file name using a ``{year}`` pattern.

    Args:
        file_name: Bare file name (no directory)
        pattern: File name pattern with a ``{year}`` placeholder

    Returns:
        The year, or None when the name does not match
    """
    match = year_pattern_regex(pattern).match(file_name)
    return int(match.group("year")) if match else None


def list_files_by_year(directory: Union[str, Path], pattern: str) -> Dict[int, Path]:
    """
    List files of a directory whose names match a ``{year}`` pattern.

    Args:
        directory: Directory to search
        pattern: File name pattern with a ``{year}`` placeholder

    Returns:
        Mapping year -> file path, ordered by year
    """
    dir_path = Path(directory)

    if not dir_path.exists() or not dir_path.is_dir():
        logger.warning(f"Directory {directory} does not exist or is not a directory")
        return {}

    regex = year_pattern_regex(pattern)
    found: Dict[int, Path] = {}
    for path in sorted(dir_path.iterdir()):
        match = regex.match(path.name)
        if match and path.is_file():
            found[int(match.group("year"))] = path

    return dict(sorted(found.items()))


def get_file_size(file_path: Union[str, Path]) -> int:
    """
    Get file size in bytes.

    Args:
        file_path: Path to the file

    Returns:
        File size in bytes
    """
    return Path(file_path).stat().st_size


def get_file_size_human_readable(file_path: Union[str, Path]) -> str:
    """
    Get file size in human-readable format.

    Args:
        file_path: Path to the file

    Returns:
        Human-readable file size (e.g., "2.5 MB")
    """
    size_bytes = float(get_file_size(file_path))

    for unit in ['B', 'KB', 'MB', 'GB', 'TB']:
        if size_bytes < 1024 or unit == 'TB':
            break
        size_bytes /= 1024.0

    return f"{size_bytes:.1f} {unit}"


def list_output_files(directory: Union[str, Path]) -> List[Path]:
    """
    List every file below a directory, sorted by relative path.

    Args:
        directory: Root directory

    Returns:
        Sorted list of file paths
    """
    root = Path(directory)
    return sorted((p for p in root.rglob("*") if p.is_file()), key=lambda p: p.relative_to(root).as_posix())
