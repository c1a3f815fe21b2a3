"""
Report package for ictog.

CSV writer and reader, Sankey documents with their SVG rendering, and SVG
line charts with an optional price overlay.
"""

from .csv_io import (
    write_csv,
    read_csv,
    FLOW_SCHEMA,
    FOOTPRINT_SCHEMA,
    CONTRIBUTOR_SCHEMA,
    OVERLAY_SCHEMA,
)
from .sankey import SankeyNode, SankeyLink, SankeyDocument, SankeyRenderer, to_sankey, render_sankey_svg
from .charts import LineChartRenderer, render_line_chart
from .svg import SvgDocument, fmt

__all__ = [
    "write_csv",
    "read_csv",
    "FLOW_SCHEMA",
    "FOOTPRINT_SCHEMA",
    "CONTRIBUTOR_SCHEMA",
    "OVERLAY_SCHEMA",
    "SankeyNode",
    "SankeyLink",
    "SankeyDocument",
    "SankeyRenderer",
    "to_sankey",
    "render_sankey_svg",
    "LineChartRenderer",
    "render_line_chart",
    "SvgDocument",
    "fmt",
]
