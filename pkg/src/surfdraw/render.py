"""SVG pictures of drawings.

Geometry stays exact until emission, where every coordinate is rounded to
six decimals.
"""
from fractions import Fraction
from typing import List, Optional, Tuple

import drawsvg as draw
from loguru import logger

from surfdraw.compute.compute_backend import ComputeBackend
from surfdraw.crossings import crossing_inventory
from surfdraw.drawing import Drawing
from surfdraw.geometry import Point
from surfdraw.part import Part
from surfdraw.render_style import RenderStyle

_ARROW = Fraction(1, 2)


def _decimal(v: Fraction) -> float:
    return float(round(v, 6))


class _Canvas:

    def __init__(self, d: Drawing, style: RenderStyle):
        self.d = d
        self.style = style
        self.scale = Fraction(style.scale)
        self.margin = Fraction(style.margin)


    def xy(self, p: Point) -> Tuple[float, float]:
        x, y = p
        return (
            _decimal(self.margin + x * self.scale),
            _decimal(self.margin + (self.d.surface.height - y) * self.scale)
        )


    def size(self) -> Tuple[float, float]:
        return (
            _decimal(2 * self.margin + self.d.surface.width * self.scale),
            _decimal(2 * self.margin + self.d.surface.height * self.scale)
        )


def _frame(canvas: _Canvas) -> List[draw.DrawingElement]:
    s = canvas.d.surface
    w, h = s.width, s.height
    corners = [(Fraction(0), Fraction(0)), (w, Fraction(0)), (w, h), (Fraction(0), h)]
    elements = []
    for i, role in enumerate(["bottom", "right", "top", "left"]):
        x1, y1 = canvas.xy(corners[i])
        x2, y2 = canvas.xy(corners[(i + 1) % 4])
        dashed = role in ("left", "right")
        elements.append(draw.Line(
            x1, y1, x2, y2,
            stroke="black",
            stroke_width=1,
            stroke_dasharray="4 3" if dashed else "none",
            data_role="frame",
            data_side=role
        ))

    return elements


def _arrowhead(canvas: _Canvas, tip: Point, direction: Tuple[int, int], side: str) -> draw.DrawingElement:
    size = Fraction(canvas.style.marker_size) * 2 / canvas.scale
    dx, dy = direction
    back = (tip[0] - dx * size, tip[1] - dy * size)
    left = (back[0] - dy * size * _ARROW, back[1] + dx * size * _ARROW)
    right = (back[0] + dy * size * _ARROW, back[1] - dx * size * _ARROW)
    coords = []
    for p in (tip, left, right):
        coords.extend(canvas.xy(p))

    return draw.Lines(*coords, close=True, fill="black", stroke="none", data_role="arrow", data_side=side)


def _arrows(canvas: _Canvas) -> List[draw.DrawingElement]:
    """Arrowheads on the sides: one per horizontal side, two per vertical side.

    On the Klein bottle the left side points down and the right side up.
    """
    s = canvas.d.surface
    w, h = s.width, s.height
    half_w, half_h = w / 2, h / 2
    step = Fraction(canvas.style.marker_size) * 2 / canvas.scale
    left_dir = (0, -1) if s.is_klein else (0, 1)
    elements = [
        _arrowhead(canvas, (half_w, Fraction(0)), (1, 0), "bottom"),
        _arrowhead(canvas, (half_w, h), (1, 0), "top"),
    ]
    for offset in (Fraction(0), step):
        elements.append(_arrowhead(canvas, (w, half_h + offset), (0, 1), "right"))
        elements.append(_arrowhead(canvas, (Fraction(0), half_h - offset * left_dir[1]), left_dir, "left"))

    return elements


def _vertex_marker(canvas: _Canvas, name: str, part: Part, p: Point) -> draw.DrawingElement:
    x, y = canvas.xy(p)
    r = canvas.style.marker_size
    shape = canvas.style.a_marker if part == Part.A else canvas.style.b_marker
    if shape == "disc":
        return draw.Circle(x, y, r, fill="black", data_role="vertex", data_name=name)

    return draw.Rectangle(x - r, y - r, 2 * r, 2 * r, fill="black", data_role="vertex", data_name=name)


def _crossing_marker(canvas: _Canvas, p: Point) -> draw.DrawingElement:
    x, y = canvas.xy(p)
    r = canvas.style.marker_size
    if canvas.style.crossing_marker == "ring":
        return draw.Circle(x, y, r, fill="none", stroke="red", stroke_width=1.5, data_role="crossing")

    path = draw.Path(fill="none", stroke="red", stroke_width=1.5, data_role="crossing")
    path.M(x - r, y - r).L(x + r, y + r).M(x - r, y + r).L(x + r, y - r)
    return path


def render_svg(
    d: Drawing,
    style: Optional[RenderStyle] = None,
    compute: Optional[ComputeBackend] = None
) -> str:
    """SVG picture of a valid drawing.

    The frame is drawn with dashed vertical sides.
    Each arc is its own polyline, each vertex has one marker at its canonical point,
    and each crossing gets a ring or a cross.

    Raises
    ------
    surfdraw.exceptions.InvalidDrawingError
        The drawing failed validation.

    Examples
    --------
    .. code-block:: python

        from surfdraw import RenderStyle, load_drawing, render_svg

        svg = render_svg(load_drawing("fixtures/k45_klein_counterexample.tgd"), RenderStyle(scale=6))
    """
    if style is None:
        style = RenderStyle()

    crossings = crossing_inventory(d, compute=compute)
    canvas = _Canvas(d, style)
    width, height = canvas.size()
    svg = draw.Drawing(width, height)
    svg.append(draw.Rectangle(0, 0, width, height, fill="white"))
    for element in _frame(canvas):
        svg.append(element)

    if style.show_arrows:
        for element in _arrows(canvas):
            svg.append(element)

    for e in d.edges:
        for a, arc in enumerate(e.arcs):
            coords = []
            for p in arc:
                coords.extend(canvas.xy(p))

            svg.append(draw.Lines(
                *coords,
                close=False,
                fill="none",
                stroke="gray",
                stroke_width=1.5,
                data_role="edge",
                data_edge=e.name,
                data_arc=a
            ))

    for v, p in d.vertices.items():
        svg.append(_vertex_marker(canvas, v.name, v.part, p))

    for c in crossings:
        svg.append(_crossing_marker(canvas, c.point))

    logger.debug(f"Rendered {len(d.vertices)} vertices, {len(d.edges)} edges and {len(crossings)} crossings.")
    return svg.as_svg()
