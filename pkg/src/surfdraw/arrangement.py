"""Planarization of a drawing on its surface.

Nodes are the vertices and the crossings. A segment is the piece of an edge between
two consecutive nodes; it may pass through several transits and bends.
"""
from collections import defaultdict
from typing import Dict, List, Optional, Tuple
from typing_extensions import Annotated

from loguru import logger
from pydantic import BaseModel, ConfigDict, Field

from surfdraw.checks import CrossingRecord
from surfdraw.compute.compute_backend import ComputeBackend
from surfdraw.drawing import Drawing
from surfdraw.geometry import Point, Segment, direction_key, segment_param
from surfdraw.side import Side
from surfdraw.surface import SurfaceSpec
from surfdraw.validation import require_valid
from surfdraw.vertex_id import VertexId

End = Tuple[int, int]
Piece = Tuple[Point, Point]


class ArrangementNode(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    id: int
    point: Annotated[Point, Field(description="Canonical surface point.")]
    vertex: Annotated[Optional[VertexId], Field(description="Graph vertex, or None for a crossing.")] = None


    @property
    def label(self) -> str:
        if self.vertex is not None:
            return self.vertex.name

        return f"x{self.id}"


class ArrangementSegment(BaseModel):
    """Part of an edge between two nodes, as straight pieces in rectangle coordinates.

    ``signature`` is ``-1`` when carrying the canonical chart at ``start``
    along the segment reverses it relative to the canonical chart at ``end``.
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    id: int
    edge: Annotated[int, Field(description="Index of the original edge.")]
    start: Annotated[int, Field(description="Node id where the segment starts.")]
    end: Annotated[int, Field(description="Node id where the segment ends.")]
    pieces: Annotated[Tuple[Piece, ...], Field(description="Straight pieces from start to end.")]
    signature: Annotated[int, Field(description="+1 or -1, orientation carried along the segment.")]


    @property
    def start_rep(self) -> Point:
        return self.pieces[0][0]


    @property
    def end_rep(self) -> Point:
        return self.pieces[-1][1]


    def node(self, k: int) -> int:
        return self.start if k == 0 else self.end


    def rep(self, k: int) -> Point:
        return self.start_rep if k == 0 else self.end_rep


class Arrangement(BaseModel):
    """Nodes, segments and counter-clockwise rotations of segment ends at every node.

    A segment end is ``(segment id, 0)`` for its start and ``(segment id, 1)`` for its end.
    Rotations start at the direction of smallest angle from the positive x axis,
    measured in the chart of the canonical representative.
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    nodes: List[ArrangementNode]
    segments: List[ArrangementSegment]
    rotations: Dict[int, List[End]]


    @property
    def crossing_nodes(self) -> List[ArrangementNode]:
        return [n for n in self.nodes if n.vertex is None]


    def degree(self, node: int) -> int:
        return len(self.rotations[node])


    def other_end(self, end: End) -> End:
        return (end[0], 1 - end[1])


def planarize(d: Drawing, compute: Optional[ComputeBackend] = None) -> Arrangement:
    """Split every edge at its crossings and order segment ends around each node.

    Parameters
    ----------
    d : Drawing
        The drawing.
    compute : Optional[ComputeBackend]
        Backend for the validation pass.

    Returns
    -------
    Arrangement
        Nodes are the vertices, in part-then-index order, followed by crossings sorted by point.

    Raises
    ------
    surfdraw.exceptions.InvalidDrawingError
        The drawing failed validation.
    """
    crossings = require_valid(d, compute=compute).crossings
    return build_arrangement(d, crossings)


def build_arrangement(d: Drawing, crossings: List[CrossingRecord]) -> Arrangement:
    """Arrangement of a drawing that already passed validation, given its crossings.
    """
    surface = d.surface
    nodes = [ArrangementNode(id=i, point=p, vertex=v) for i, (v, p) in enumerate(d.vertices.items())]
    node_of: Dict[Point, int] = {n.point: n.id for n in nodes}
    for p in sorted({c.point for c in crossings}):
        node_of[p] = len(nodes)
        nodes.append(ArrangementNode(id=len(nodes), point=p))

    cuts: Dict[Tuple[int, int, int], List[Point]] = defaultdict(list)
    for c in crossings:
        cuts[(c.edge_a, c.arc_a, c.seg_a)].append(c.point)
        cuts[(c.edge_b, c.arc_b, c.seg_b)].append(c.point)

    segments: List[ArrangementSegment] = []
    for e, edge in enumerate(d.edges):
        start = node_of[surface.identify(edge.start)]
        pieces: List[Piece] = []
        flips = 0
        for a, s, seg in edge.segments():
            if a > 0 and s == 0 and surface.is_klein and len(surface.sides_of(edge.arcs[a - 1][-1]) & {Side.LEFT, Side.RIGHT}) > 0:
                flips += 1

            stops = sorted(cuts.get((e, a, s), []), key=lambda p: segment_param(p, seg))
            prev = seg.p
            for p in stops:
                pieces.append((prev, p))
                segments.append(_segment(surface, len(segments), e, start, node_of[p], pieces, flips))
                start = node_of[p]
                pieces = []
                flips = 0
                prev = p

            pieces.append((prev, seg.q))

        segments.append(_segment(surface, len(segments), e, start, node_of[surface.identify(edge.end)], pieces, flips))

    rotations: Dict[int, List[End]] = {n.id: [] for n in nodes}
    directions: Dict[End, Point] = {}
    for seg in segments:
        for k in (0, 1):
            p, q = seg.pieces[0] if k == 0 else (seg.pieces[-1][1], seg.pieces[-1][0])
            directions[(seg.id, k)] = surface.to_canonical_direction(p, (q[0] - p[0], q[1] - p[1]))
            rotations[seg.node(k)].append((seg.id, k))

    for node, ends in rotations.items():
        ends.sort(key=lambda end: direction_key(directions[end]))

    logger.debug(f"Planarized drawing into {len(nodes)} nodes and {len(segments)} segments.")
    return Arrangement(nodes=nodes, segments=segments, rotations=rotations)


def _segment(
    surface: SurfaceSpec,
    sid: int,
    edge: int,
    start: int,
    end: int,
    pieces: List[Piece],
    flips: int
) -> ArrangementSegment:
    parity = flips
    if surface.chart_flip(pieces[0][0]):
        parity += 1

    if surface.chart_flip(pieces[-1][1]):
        parity += 1

    return ArrangementSegment(
        id=sid,
        edge=edge,
        start=start,
        end=end,
        pieces=tuple(pieces),
        signature=-1 if parity % 2 == 1 else 1
    )
