"""
Text processing utilities for ictog
"""

import re
import logging
from typing import Iterable, List

from rapidfuzz import process
from rapidfuzz.distance import Levenshtein

logger = logging.getLogger(__name__)

_WHITESPACE = re.compile(r'\s+')


def normalize_label(text: str) -> str:
    """
    Normalize a dataset label for comparison.

    Trims the label and collapses internal whitespace runs to a single space.
    Case is preserved: distinct sectors may differ only by case.

    Args:
        text: Label as found in a file header or configuration

    Returns:
        Normalized label
    """
    return _WHITESPACE.sub(' ', text).strip()


def normalize_term(text: str) -> str:
    """
    Normalize a free-text vocabulary term (case-insensitive).

    Args:
        text: Term to normalize

    Returns:
        Case-folded, whitespace-normalized term
    """
    return normalize_label(text).casefold()


def nearest_matches(term: str, candidates: Iterable[str], max_distance: int = 3) -> List[str]:
    """
    Suggest candidates close to a term.

    Args:
        term: Term that failed to match
        candidates: Known terms
        max_distance: Largest edit distance still suggested

    Returns:
        Candidates within ``max_distance``, closest first, ties alphabetical
    """
    scored = process.extract(
        term, sorted(set(candidates)), scorer=Levenshtein.distance, score_cutoff=max_distance, limit=None
    )
    return [match[0] for match in sorted(scored, key=lambda m: (m[1], m[0]))]


def closest_match(term: str, candidates: Iterable[str]) -> str:
    """
    Return the single closest candidate regardless of distance.

    Args:
        term: Term that failed to match
        candidates: Known terms (non-empty)

    Returns:
        Closest candidate, ties broken alphabetically
    """
    return min(set(candidates), key=lambda c: (Levenshtein.distance(term, c), c))
