import math
import os

from jinja2 import Template

from curvilinearguard.config.guarding_config_loader import Rendering
from curvilinearguard.geometry.guard_mapper import ArcGuard, GuardSet
from curvilinearguard.geometry.predicates import as_float
from curvilinearguard.tracking_decorator import TrackingDecorator
from curvilinearguard.trigraph.triangulation_graph import (
    DominatingSet,
    TriangulationGraph,
    edge_key,
)

SVG_TEMPLATE = Template(
    """<?xml version="1.0" encoding="UTF-8"?>
<svg xmlns="http://www.w3.org/2000/svg" width="{{ width }}" height="{{ height }}" viewBox="0 0 {{ width }} {{ height }}">
  <rect width="100%" height="100%" fill="#ffffff"/>
{%- for path in paths %}
  <path d="{{ path.d }}" fill="{{ path.fill }}" stroke="{{ path.stroke }}" stroke-width="{{ path.width }}"{% if path.dashed %} stroke-dasharray="6 4"{% endif %}/>
{%- endfor %}
{%- for vertex in vertices %}
  <circle cx="{{ vertex.x }}" cy="{{ vertex.y }}" r="3" fill="#1e293b"/>
  <text x="{{ vertex.x }}" y="{{ vertex.y }}" dx="5" dy="-5" font-family="sans-serif" font-size="11" fill="#475569">{{ vertex.label }}</text>
{%- endfor %}
</svg>
"""
)

BOUNDARY_COLOR = "#1e293b"
DIAGONAL_COLOR = "#64748b"
GUARD_COLOR = "#dc2626"


def _number(value):
    text = f"{value:.3f}".rstrip("0").rstrip(".")
    return "0" if text == "-0" else text


class _Frame:
    """Maps y-up model coordinates onto the SVG canvas with a margin"""

    def __init__(self, points, rendering: Rendering):
        xs = [p[0] for p in points]
        ys = [p[1] for p in points]
        self.minx, self.maxy = min(xs), max(ys)
        span_x = max(max(xs) - self.minx, 1e-9)
        span_y = max(self.maxy - min(ys), 1e-9)
        margin = rendering.margin * max(span_x, span_y)
        self.scale = rendering.width / (span_x + 2 * margin)
        self.margin = margin
        self.width = rendering.width
        self.height = int(math.ceil((span_y + 2 * margin) * self.scale))

    def map(self, p):
        return (
            _number((p[0] - self.minx + self.margin) * self.scale),
            _number((self.maxy - p[1] + self.margin) * self.scale),
        )

    def move(self, p):
        x, y = self.map(p)
        return f"M {x} {y}"

    def line(self, p):
        x, y = self.map(p)
        return f"L {x} {y}"

    def arc(self, arc):
        if arc.is_segment:
            return self.line(as_float(arc.q))
        x, y = self.map(as_float(arc.q))
        r = _number(arc.radius * self.scale)
        # Counterclockwise in y-up coordinates is the positive sweep on screen
        return f"A {r} {r} 0 0 1 {x} {y}"


def _path(d, stroke, width, dashed=False, fill="none"):
    return {"d": d, "stroke": stroke, "width": _number(width), "dashed": dashed, "fill": fill}


def _write(content, out_path):
    if out_path is not None:
        path_name = os.path.dirname(out_path)
        if path_name:
            os.makedirs(path_name, exist_ok=True)
        with open(out_path, "w", encoding="utf-8") as svg_file:
            svg_file.write(content)
    return content


def graph_layout(n):
    """Vertices of the convex n-gon on the unit circle, vertex 0 at the bottom"""
    return [
        (math.sin(2 * math.pi * v / n), -math.cos(2 * math.pi * v / n)) for v in range(n)
    ]


@TrackingDecorator.track_time
def render_graph_svg(
    graph: TriangulationGraph,
    dominating_set: DominatingSet = None,
    out_path=None,
    rendering: Rendering = None,
) -> str:
    """
    Draws a triangulation graph as a convex polygon: boundary edges solid,
    diagonals dashed, members of the dominating set thick
    :param graph: triangulation graph
    :param dominating_set: optional set to highlight
    :param out_path: optional file to write
    :param rendering: canvas settings
    :return: SVG document
    """
    rendering = rendering or Rendering()
    points = graph_layout(graph.n)
    frame = _Frame(points, rendering)
    members = dominating_set.members if dominating_set is not None else frozenset()

    paths = []
    for a, b in graph.edges:
        member = edge_key(a, b) in members
        diagonal = not graph.is_boundary(a, b)
        paths.append(
            _path(
                f"{frame.move(points[a])} {frame.line(points[b])}",
                GUARD_COLOR if member else (DIAGONAL_COLOR if diagonal else BOUNDARY_COLOR),
                rendering.guard_stroke_width if member else rendering.stroke_width,
                dashed=diagonal,
            )
        )

    vertices = [
        {"x": x, "y": y, "label": graph.label(v)}
        for v, (x, y) in enumerate(frame.map(p) for p in points)
    ]
    content = SVG_TEMPLATE.render(
        width=frame.width, height=frame.height, paths=paths, vertices=vertices
    )
    return _write(content, out_path)


@TrackingDecorator.track_time
def render_polygon_svg(
    polygon,
    guard_set: GuardSet = None,
    diagonals=(),
    out_path=None,
    rendering: Rendering = None,
) -> str:
    """
    Draws a polygon with its boundary solid, the given triangulation
    diagonals dashed and the guards thick
    :param polygon: piecewise-convex or locally convex polygon
    :param guard_set: optional guards to highlight
    :param diagonals: vertex pairs to draw dashed
    :param out_path: optional file to write
    :param rendering: canvas settings
    :return: SVG document
    """
    rendering = rendering or Rendering()
    outline = polygon.outline
    minx, miny, maxx, maxy = outline.bounds()
    frame = _Frame([(minx, miny), (maxx, maxy)], rendering)
    corners = [as_float(v) for v in polygon.vertices]

    boundary = frame.move(as_float(outline.vertex(0)))
    boundary += "".join(f" {frame.arc(arc)}" for arc in outline.arcs) + " Z"
    paths = [_path(boundary, BOUNDARY_COLOR, rendering.stroke_width, fill="#f8fafc")]

    for a, b in diagonals:
        paths.append(
            _path(
                f"{frame.move(corners[a])} {frame.line(corners[b])}",
                DIAGONAL_COLOR,
                rendering.stroke_width,
                dashed=True,
            )
        )

    for guard in guard_set.guards if guard_set is not None else ():
        if isinstance(guard, ArcGuard):
            arcs = [outline.arc(i) for i in polygon.edge_arcs(guard.index)]
            d = frame.move(as_float(arcs[0].p)) + "".join(f" {frame.arc(arc)}" for arc in arcs)
            dashed = False
        else:
            d = f"{frame.move(corners[guard.a])} {frame.line(corners[guard.b])}"
            dashed = True
        paths.append(_path(d, GUARD_COLOR, rendering.guard_stroke_width, dashed=dashed))

    vertices = [
        {"x": x, "y": y, "label": v} for v, (x, y) in enumerate(frame.map(p) for p in corners)
    ]
    content = SVG_TEMPLATE.render(
        width=frame.width, height=frame.height, paths=paths, vertices=vertices
    )
    return _write(content, out_path)
