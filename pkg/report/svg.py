# ictog/report/svg.py
"""
Minimal SVG 1.1 writer.

Elements are emitted in insertion order with attributes in the order given,
and every number goes through ``fmt`` so identical input gives identical text.
"""

from html import escape
from typing import List, Optional, Sequence, Tuple, Union

Number = Union[int, float]


def fmt(value: Number, precision: int = 2) -> str:
    """Fixed-precision number text, never ``-0.00``."""
    text = f"{float(value):.{precision}f}"
    if text.lstrip("-").strip("0.") == "":
        text = text.lstrip("-")
    return text


class SvgDocument:
    """Accumulates elements of one SVG document."""

    def __init__(self, width: int, height: int, precision: int = 2, title: Optional[str] = None):
        self.width = width
        self.height = height
        self.precision = precision
        self.title = title
        self._elements: List[str] = []

    def _attrs(self, attrs: Sequence[Tuple[str, object]]) -> str:
        parts = []
        for name, value in attrs:
            if value is None:
                continue
            if isinstance(value, (int, float)) and not isinstance(value, bool):
                value = fmt(value, self.precision)
            parts.append(f'{name}="{escape(str(value), quote=True)}"')
        return " ".join(parts)

    def element(self, tag: str, attrs: Sequence[Tuple[str, object]], text: Optional[str] = None) -> None:
        attributes = self._attrs(attrs)
        opening = f"<{tag} {attributes}" if attributes else f"<{tag}"
        if text is None:
            self._elements.append(f"  {opening}/>")
        else:
            self._elements.append(f"  {opening}>{escape(text, quote=False)}</{tag}>")

    def points(self, coordinates: Sequence[Tuple[Number, Number]]) -> str:
        return " ".join(f"{fmt(x, self.precision)},{fmt(y, self.precision)}" for x, y in coordinates)

    def to_string(self) -> str:
        header = (
            '<?xml version="1.0" encoding="UTF-8"?>\n'
            f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
            f'width="{self.width}" height="{self.height}" viewBox="0 0 {self.width} {self.height}">'
        )
        lines = [header]
        if self.title:
            lines.append(f"  <title>{escape(self.title, quote=False)}</title>")
        lines.extend(self._elements)
        lines.append("</svg>")
        return "\n".join(lines) + "\n"
