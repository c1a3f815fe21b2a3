# ictog/mrio_core/summation.py
"""
Order-independent summation for aggregate flows.

``math.fsum`` tracks exact partial sums, so the result is the correctly
rounded total of the inputs whatever their order; aggregates over shuffled
or re-partitioned cells are therefore bit-identical.
"""

import math
from typing import Iterable

import numpy as np


def exact_sum(values: Iterable[float]) -> float:
    """Correctly rounded sum of ``values``."""
    if isinstance(values, np.ndarray):
        return math.fsum(values.ravel().tolist())
    return math.fsum(values)
