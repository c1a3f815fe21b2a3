# ictog/report/charts.py
"""
Static line charts of flow series, optionally with an annual price overlay
on a secondary axis.
"""

import logging
from typing import List, Optional, Sequence, Tuple

from config.app_config import ReportConfig, get_config
from flows.models import FlowSeries
from ingest.vectors import PriceSeries
from mrio_core.exceptions import TooFewPoints
from .svg import SvgDocument

logger = logging.getLogger(__name__)

MARGIN_LEFT = 80
MARGIN_RIGHT = 80
MARGIN_TOP = 50
MARGIN_BOTTOM = 60
Y_TICKS = 5
MAX_X_LABELS = 12

SERIES_COLOR = "#1f77b4"
OVERLAY_COLOR = "#d62728"
AXIS_COLOR = "#333333"


def _tick_label(value: float) -> str:
    return f"{value:.4g}"


def _value_range(values: Sequence[float]) -> Tuple[float, float]:
    low, high = min(0.0, min(values)), max(values)
    if high <= low:
        high = low + 1.0
    return low, high


class LineChartRenderer:
    """Renders a FlowSeries (and an optional PriceSeries) as SVG text."""

    def __init__(self, config: Optional[ReportConfig] = None):
        # Allow dependency injection or use global config
        self.config = config or get_config().report
        self.width = self.config.chart_width
        self.height = self.config.chart_height
        self.plot_width = self.width - MARGIN_LEFT - MARGIN_RIGHT
        self.plot_height = self.height - MARGIN_TOP - MARGIN_BOTTOM

    def _x(self, year: int, first: int, last: int) -> float:
        return MARGIN_LEFT + (year - first) / (last - first) * self.plot_width

    def _y(self, value: float, low: float, high: float) -> float:
        return MARGIN_TOP + (high - value) / (high - low) * self.plot_height

    def _y_axis(self, svg: SvgDocument, x: float, low: float, high: float, anchor: str, color: str, label: str) -> None:
        svg.element("line", [("class", "axis"), ("x1", x), ("y1", MARGIN_TOP), ("x2", x),
                             ("y2", MARGIN_TOP + self.plot_height), ("stroke", color)])
        offset = -8 if anchor == "end" else 8
        for i in range(Y_TICKS):
            value = low + (high - low) * i / (Y_TICKS - 1)
            y = self._y(value, low, high)
            svg.element("line", [("x1", x), ("y1", y), ("x2", x + offset / 2), ("y2", y), ("stroke", color)])
            svg.element("text", [("x", x + offset), ("y", y + 4), ("text-anchor", anchor),
                                 ("font-size", 11), ("fill", color)], _tick_label(value))
        label_x = x - 60 if anchor == "end" else x + 60
        svg.element("text", [("x", label_x), ("y", MARGIN_TOP - 15), ("text-anchor", "middle"),
                             ("font-size", 12), ("fill", color)], label)

    def render(
        self,
        series: FlowSeries,
        overlay: Optional[PriceSeries] = None,
        title: Optional[str] = None,
        unit: str = "M€",
    ) -> str:
        """
        Render the chart.

        Args:
            series: Flow series with at least two years
            overlay: Annual prices drawn against a secondary axis
            title: Chart title (defaults to ``FROM -> TO``)
            unit: Unit of the flow values

        Returns:
            SVG document text

        Raises:
            TooFewPoints: fewer than two series points

        An overlay with fewer than two prices inside the series years is
        left out with a warning; the flow line is still drawn.
        """
        if len(series) < 2:
            raise TooFewPoints(f"A line chart needs at least 2 points, got {len(series)}")

        years = series.years
        first, last = years[0], years[-1]
        low, high = _value_range(series.values)
        title = title or f"{series.from_group} -> {series.to_group}"

        overlay_points: List[Tuple[int, float]] = []
        if overlay is not None:
            overlay_points = [(y, p) for y, p in overlay.points.items() if first <= y <= last]
            if len(overlay_points) < 2:
                logger.warning(
                    f"Price overlay {overlay.name!r} has {len(overlay_points)} point(s) within {first}-{last}; omitted"
                )
                overlay_points = []

        svg = SvgDocument(self.width, self.height, self.config.precision, title=title)
        svg.element("rect", [("x", 0), ("y", 0), ("width", self.width), ("height", self.height), ("fill", "#ffffff")])
        svg.element("text", [("x", self.width / 2), ("y", 22), ("text-anchor", "middle"), ("font-size", 15)], title)

        bottom = MARGIN_TOP + self.plot_height
        svg.element("line", [("class", "axis"), ("x1", MARGIN_LEFT), ("y1", bottom),
                             ("x2", MARGIN_LEFT + self.plot_width), ("y2", bottom), ("stroke", AXIS_COLOR)])
        step = max(1, -(-len(years) // MAX_X_LABELS))
        for i, year in enumerate(years):
            if i % step and year != last:
                continue
            x = self._x(year, first, last)
            svg.element("line", [("x1", x), ("y1", bottom), ("x2", x), ("y2", bottom + 5), ("stroke", AXIS_COLOR)])
            svg.element("text", [("x", x), ("y", bottom + 20), ("text-anchor", "middle"), ("font-size", 11)], str(year))

        self._y_axis(svg, MARGIN_LEFT, low, high, "end", SERIES_COLOR, unit)
        svg.element("polyline", [
            ("class", "series"),
            ("points", svg.points([(self._x(y, first, last), self._y(v, low, high)) for y, v in zip(years, series.values)])),
            ("fill", "none"), ("stroke", SERIES_COLOR), ("stroke-width", 2),
        ])

        if overlay_points:
            p_low, p_high = _value_range([p for _, p in overlay_points])
            self._y_axis(svg, MARGIN_LEFT + self.plot_width, p_low, p_high, "start", OVERLAY_COLOR, overlay.name)
            svg.element("polyline", [
                ("class", "overlay"),
                ("points", svg.points([(self._x(y, first, last), self._y(p, p_low, p_high)) for y, p in overlay_points])),
                ("fill", "none"), ("stroke", OVERLAY_COLOR), ("stroke-width", 2), ("stroke-dasharray", "6,3"),
            ])

        logger.debug(f"Rendered line chart {title!r}: {len(years)} points, overlay={'yes' if overlay_points else 'no'}")
        return svg.to_string()


def render_line_chart(
    series: FlowSeries,
    overlay: Optional[PriceSeries] = None,
    config: Optional[ReportConfig] = None,
    title: Optional[str] = None,
    unit: str = "M€",
) -> str:
    """Render a flow series as a deterministic SVG line chart."""
    return LineChartRenderer(config).render(series, overlay, title=title, unit=unit)
