# ictog/report/sankey.py
"""
Sankey documents (nodes/links JSON) built from aggregate flows, and a static
two-column SVG rendering of them.
"""

import json
import logging
from typing import Dict, List, Literal, Mapping, Optional, Sequence

from pydantic import BaseModel, Field

from config.app_config import ReportConfig, get_config
from flows.models import FlowValue
from mrio_core.exceptions import DanglingLink
from mrio_core.summation import exact_sum
from .svg import SvgDocument

logger = logging.getLogger(__name__)

NODE_WIDTH = 18
NODE_GAP = 12
MARGIN = 40
LABEL_SPACE = 160


class SankeyNode(BaseModel):
    id: str
    label: str
    side: Literal["source", "target", "both"]


class SankeyLink(BaseModel):
    source: str
    target: str
    value: float
    # Negative aggregates are kept as-is and flagged
    flagged: bool = False


class SankeyDocument(BaseModel):
    """Nodes/links document; every link endpoint is a node id."""

    nodes: List[SankeyNode] = Field(default_factory=list)
    links: List[SankeyLink] = Field(default_factory=list)
    unit: str = "M€"
    year: Optional[int] = None

    def check(self) -> "SankeyDocument":
        """
        Raises:
            DanglingLink: a link endpoint is not a node, or a negative value is not flagged
        """
        ids = {node.id for node in self.nodes}
        for link in self.links:
            for end in (link.source, link.target):
                if end not in ids:
                    raise DanglingLink(f"Link {link.source}->{link.target}: no node {end!r}")
            if link.value < 0 and not link.flagged:
                raise DanglingLink(f"Link {link.source}->{link.target} has unflagged negative value {link.value}")
        return self

    @property
    def total(self) -> float:
        return exact_sum(link.value for link in self.links)

    def to_json(self) -> str:
        return json.dumps(self.model_dump(), indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def to_sankey(
    flows: Sequence[FlowValue],
    node_labels: Optional[Mapping[str, str]] = None,
    unit: str = "M€",
) -> SankeyDocument:
    """
    Build a Sankey document with one node per distinct group and one link per flow.

    Args:
        flows: Aggregate flows (e.g. the per-activity breakdown of one year)
        node_labels: Display label per group name; the name itself otherwise
        unit: Unit of the flow values

    Returns:
        SankeyDocument; nodes in first-appearance order, sources first

    Raises:
        ValueError: no flows
        DanglingLink: the built document is inconsistent
    """
    if not flows:
        raise ValueError("A Sankey document needs at least one flow")
    node_labels = node_labels or {}

    sources = list(dict.fromkeys(f.from_group for f in flows))
    targets = list(dict.fromkeys(f.to_group for f in flows))
    nodes = []
    for name in list(dict.fromkeys(sources + targets)):
        side = "both" if name in sources and name in targets else ("source" if name in sources else "target")
        nodes.append(SankeyNode(id=name, label=node_labels.get(name, name), side=side))

    links = []
    for flow in flows:
        if flow.value < 0:
            logger.warning(f"Negative flow {flow.from_group}->{flow.to_group} ({flow.value}) kept and flagged")
        links.append(SankeyLink(source=flow.from_group, target=flow.to_group, value=flow.value, flagged=flow.value < 0))

    years = {f.year for f in flows}
    document = SankeyDocument(nodes=nodes, links=links, unit=unit, year=years.pop() if len(years) == 1 else None)
    document.check()

    expected = exact_sum(f.value for f in flows)
    if document.total != expected:
        raise DanglingLink(f"Link total {document.total} differs from flow total {expected}")
    logger.info(f"Sankey document: {len(nodes)} nodes, {len(links)} links, total {expected} {unit}")
    return document


class SankeyRenderer:
    """Two-column Sankey: sources on the left, targets on the right."""

    def __init__(self, config: Optional[ReportConfig] = None):
        # Allow dependency injection or use global config
        self.config = config or get_config().report

    def _column(self, names: List[str], weights: Dict[str, float], scale: float) -> Dict[str, List[float]]:
        boxes = {}
        y = float(MARGIN)
        for name in names:
            h = max(weights[name] * scale, 1.0)
            boxes[name] = [y, h]
            y += h + NODE_GAP
        return boxes

    def render(self, document: SankeyDocument, title: Optional[str] = None) -> str:
        document.check()
        width, height = self.config.chart_width, self.config.chart_height
        svg = SvgDocument(width, height, self.config.precision, title=title)

        left = [n.id for n in document.nodes if n.side in ("source", "both")]
        right = [n.id for n in document.nodes if n.side in ("target", "both")]
        outgoing = {name: exact_sum(abs(l.value) for l in document.links if l.source == name) for name in left}
        incoming = {name: exact_sum(abs(l.value) for l in document.links if l.target == name) for name in right}

        usable = height - 2 * MARGIN - NODE_GAP * max(len(left) - 1, len(right) - 1, 0)
        heaviest = max(exact_sum(outgoing.values()), exact_sum(incoming.values()))
        scale = usable / heaviest if heaviest > 0 else 0.0

        left_boxes = self._column(left, outgoing, scale)
        right_boxes = self._column(right, incoming, scale)
        x_left = MARGIN + LABEL_SPACE
        x_right = width - MARGIN - LABEL_SPACE - NODE_WIDTH
        labels = {n.id: n.label for n in document.nodes}

        svg.element("rect", [("x", 0), ("y", 0), ("width", width), ("height", height), ("fill", "#ffffff")])

        # Link bands stack in link order inside each node box
        left_cursor = {name: box[0] for name, box in left_boxes.items()}
        right_cursor = {name: box[0] for name, box in right_boxes.items()}
        for link in document.links:
            thickness = abs(link.value) * scale
            y0 = left_cursor[link.source] + thickness / 2
            y1 = right_cursor[link.target] + thickness / 2
            left_cursor[link.source] += thickness
            right_cursor[link.target] += thickness
            x0, x1 = x_left + NODE_WIDTH, x_right
            mid = (x0 + x1) / 2
            path = (
                f"M{svg.points([(x0, y0)])} C{svg.points([(mid, y0)])} "
                f"{svg.points([(mid, y1)])} {svg.points([(x1, y1)])}"
            )
            svg.element("path", [
                ("class", "link flagged" if link.flagged else "link"),
                ("d", path), ("fill", "none"),
                ("stroke", "#d62728" if link.flagged else "#7f9fbf"),
                ("stroke-opacity", "0.6"), ("stroke-width", max(thickness, 1.0)),
            ])

        for name, (y, h) in left_boxes.items():
            svg.element("rect", [("class", "node"), ("x", x_left), ("y", y), ("width", NODE_WIDTH), ("height", h),
                                 ("fill", "#4c4c4c")])
            svg.element("text", [("x", x_left - 6), ("y", y + h / 2 + 4), ("text-anchor", "end"), ("font-size", 11)],
                        labels[name])
        for name, (y, h) in right_boxes.items():
            svg.element("rect", [("class", "node"), ("x", x_right), ("y", y), ("width", NODE_WIDTH), ("height", h),
                                 ("fill", "#4c4c4c")])
            svg.element("text", [("x", x_right + NODE_WIDTH + 6), ("y", y + h / 2 + 4), ("text-anchor", "start"),
                                 ("font-size", 11)], labels[name])
        return svg.to_string()


def render_sankey_svg(document: SankeyDocument, config: Optional[ReportConfig] = None, title: Optional[str] = None) -> str:
    """Render a Sankey document as static SVG."""
    return SankeyRenderer(config).render(document, title=title)
