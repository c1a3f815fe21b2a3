# ictog/emissions/display.py
"""
Half-up rounding of exact quantities for printed reports.
"""

from decimal import ROUND_HALF_UP, Decimal, localcontext
from fractions import Fraction


def to_decimal(value: Fraction, places: int) -> Decimal:
    """Round an exact value half-up to ``places`` decimals."""
    value = Fraction(value)
    with localcontext() as ctx:
        ctx.prec = 60
        exact = Decimal(value.numerator) / Decimal(value.denominator)
        return exact.quantize(Decimal(1).scaleb(-places), rounding=ROUND_HALF_UP)


def display(value: Fraction, places: int = 0, grouped: bool = False, strip: bool = False) -> str:
    """
    Text of a rounded value.

    Args:
        value: Exact value
        places: Decimals kept
        grouped: Use thousands separators
        strip: Drop trailing zeros of the decimal part

    Returns:
        e.g. ``23447842``, ``23,447,842``, ``43.1``, ``3.5``
    """
    text = format(to_decimal(value, places), ",f" if grouped else "f")
    if strip and "." in text:
        text = text.rstrip("0").rstrip(".")
    return text
