"""Reading and writing the line oriented drawing format.

.. code-block:: text

    surface klein
    rect 100 90
    vertex b1 B 0 0
    vertex a1 A 25 0
    edge a1 b1 : 25,0 25/2,1 0,0
    edge a4 b2 : 79,32 100,25 | 0,65 50,0

``#`` starts a comment. Arcs of an edge are separated by ``|``.
"""
import re
from fractions import Fraction
from pathlib import Path
from typing import Dict, List, Optional, Union

from loguru import logger
from pydantic import ValidationError

from surfdraw import exceptions
from surfdraw.drawing import Drawing
from surfdraw.edge_curve import EdgeCurve
from surfdraw.geometry import Point
from surfdraw.part import Part
from surfdraw.surface import SurfaceSpec
from surfdraw.surface_kind import SurfaceKind
from surfdraw.vertex_id import VertexId

_RATIONAL = re.compile(r"^-?[0-9]+(/[0-9]+|\.[0-9]+)?$")


def _rational(token: str, line_number: int) -> Fraction:
    if _RATIONAL.match(token) is None:
        raise exceptions.DrawingParseError(f"malformed rational {token!r}", line_number)

    try:
        return Fraction(token)
    except ZeroDivisionError:
        raise exceptions.DrawingParseError(f"zero denominator in {token!r}", line_number)
    except ValueError:
        raise exceptions.DrawingParseError(f"malformed rational {token!r}", line_number)


def _point(token: str, line_number: int) -> Point:
    coordinates = token.split(",")
    if len(coordinates) != 2:
        raise exceptions.DrawingParseError(f"malformed point {token!r}, expected 'x,y'", line_number)

    return (_rational(coordinates[0], line_number), _rational(coordinates[1], line_number))


def _vertex(name: str, line_number: int) -> VertexId:
    try:
        return VertexId.parse(name)
    except ValueError as error:
        raise exceptions.DrawingParseError(str(error), line_number)


def parse_drawing(text: str) -> Drawing:
    """Parse a drawing file.

    Only the structure is checked here: grammar, names, rationals, duplicate vertices,
    and edge ends sitting on representatives of their vertices.
    Use ``surfdraw.validate`` for geometry.

    Parameters
    ----------
    text : str
        Contents of a drawing file.

    Returns
    -------
    Drawing
        The parsed drawing.

    Raises
    ------
    surfdraw.exceptions.DrawingParseError
        The text does not follow the grammar. The error carries the line number.
    """
    kind: Optional[SurfaceKind] = None
    surface: Optional[SurfaceSpec] = None
    vertices: Dict[VertexId, Point] = {}
    edges: List[EdgeCurve] = []
    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line == "":
            continue

        tokens = line.split()
        keyword = tokens[0]
        if keyword == "surface":
            if kind is not None:
                raise exceptions.DrawingParseError("surface declared twice", line_number)

            if len(tokens) != 2:
                raise exceptions.DrawingParseError("expected 'surface <torus|klein>'", line_number)

            try:
                kind = SurfaceKind(tokens[1])
            except ValueError:
                raise exceptions.DrawingParseError(f"unknown surface kind {tokens[1]!r}", line_number)

        elif keyword == "rect":
            if kind is None:
                raise exceptions.DrawingParseError("'rect' before 'surface'", line_number)

            if surface is not None:
                raise exceptions.DrawingParseError("rect declared twice", line_number)

            if len(tokens) != 3:
                raise exceptions.DrawingParseError("expected 'rect <W> <H>'", line_number)

            width = _rational(tokens[1], line_number)
            height = _rational(tokens[2], line_number)
            try:
                surface = SurfaceSpec(kind=kind, width=width, height=height)
            except ValidationError:
                raise exceptions.DrawingParseError("rectangle sides must be positive", line_number)

        elif keyword == "vertex":
            if surface is None:
                raise exceptions.DrawingParseError("'vertex' before 'surface' and 'rect'", line_number)

            if len(tokens) != 5:
                raise exceptions.DrawingParseError("expected 'vertex <name> <A|B> <x> <y>'", line_number)

            vertex = _vertex(tokens[1], line_number)
            if tokens[2] != vertex.part.value:
                raise exceptions.DrawingParseError(f"vertex {vertex.name} declared in part {tokens[2]!r}", line_number)

            if vertex in vertices:
                raise exceptions.DrawingParseError(f"duplicate vertex {vertex.name}", line_number)

            p = (_rational(tokens[3], line_number), _rational(tokens[4], line_number))
            if not surface.contains(p):
                raise exceptions.DrawingParseError(f"vertex {vertex.name} lies outside the rectangle", line_number)

            vertices[vertex] = surface.identify(p)

        elif keyword == "edge":
            if surface is None:
                raise exceptions.DrawingParseError("'edge' before 'surface' and 'rect'", line_number)

            edges.append(_edge(tokens, surface, vertices, line_number))

        else:
            raise exceptions.DrawingParseError(f"unknown declaration {keyword!r}", line_number)

    if surface is None:
        raise exceptions.DrawingParseError("missing 'surface' or 'rect' declaration")

    logger.debug(f"Parsed drawing on {surface.kind.value} with {len(vertices)} vertices and {len(edges)} edges.")
    return Drawing(surface=surface, vertices=vertices, edges=tuple(edges))


def _edge(
    tokens: List[str],
    surface: SurfaceSpec,
    vertices: Dict[VertexId, Point],
    line_number: int
) -> EdgeCurve:
    if len(tokens) < 5 or tokens[3] != ":":
        raise exceptions.DrawingParseError("expected 'edge <a> <b> : <x,y> ...'", line_number)

    u = _vertex(tokens[1], line_number)
    v = _vertex(tokens[2], line_number)
    if u.part != Part.A or v.part != Part.B:
        raise exceptions.DrawingParseError("edges run from an A vertex to a B vertex", line_number)

    for w in (u, v):
        if w not in vertices:
            raise exceptions.DrawingParseError(f"unknown vertex {w.name}", line_number)

    arcs = []
    current: List[Point] = []
    for token in tokens[4:]:
        if token == "|":
            arcs.append(tuple(current))
            current = []
        else:
            current.append(_point(token, line_number))

    arcs.append(tuple(current))
    for arc in arcs:
        if len(arc) < 2:
            raise exceptions.DrawingParseError("every arc needs at least two points", line_number)

        for p in arc:
            if not surface.contains(p):
                raise exceptions.DrawingParseError(f"point {_format_point(p)} lies outside the rectangle", line_number)

    if surface.identify(arcs[0][0]) != vertices[u]:
        raise exceptions.DrawingParseError(f"edge does not start at a representative of {u.name}", line_number)

    if surface.identify(arcs[-1][-1]) != vertices[v]:
        raise exceptions.DrawingParseError(f"edge does not end at a representative of {v.name}", line_number)

    return EdgeCurve(u=u, v=v, arcs=tuple(arcs))


def _format_point(p: Point) -> str:
    return f"{p[0]},{p[1]}"


def serialize_drawing(d: Drawing) -> str:
    """Canonical text of a drawing.

    Rationals are written in lowest terms, vertices before edges in part-then-index order,
    edges by ``(A index, B index)``.
    """
    lines = [
        f"surface {d.surface.kind.value}",
        f"rect {d.surface.width} {d.surface.height}",
    ]
    for v, p in d.vertices.items():
        lines.append(f"vertex {v.name} {v.part.value} {p[0]} {p[1]}")

    for e in d.edges:
        arcs = " | ".join(" ".join(_format_point(p) for p in arc) for arc in e.arcs)
        lines.append(f"edge {e.u.name} {e.v.name} : {arcs}")

    return "\n".join(lines) + "\n"


def load_drawing(path: Union[str, Path]) -> Drawing:
    """Read and parse a drawing file.

    Raises
    ------
    OSError
        The file cannot be read.
    surfdraw.exceptions.DrawingParseError
        The file does not parse.
    """
    return parse_drawing(Path(path).read_text())
