"""Lifting drawings to the universal cover of the surface.

Used as an independent way to count crossings.
"""
from typing import Dict, List, Optional, Tuple
from typing_extensions import Annotated

from pydantic import BaseModel, ConfigDict, Field

from surfdraw import exceptions
from surfdraw.compute.compute_backend import ComputeBackend
from surfdraw.drawing import Drawing
from surfdraw.geometry import IntersectionKind, Point, Segment, seg_intersect
from surfdraw.surface import IDENTITY, DeckTransform, SurfaceSpec
from surfdraw.validation import require_valid


class LiftedSegment(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    edge: Annotated[int, Field(description="Index of the original edge.")]
    tile: Annotated[Tuple[int, int], Field(description="Tile (i, j) of the plane the segment lies in.")]
    p: Point
    q: Point


def _lift_edge(d: Drawing, e: int) -> List[Tuple[DeckTransform, Segment]]:
    surface = d.surface
    edge = d.edges[e]
    lifted = []
    t = IDENTITY
    for a, arc in enumerate(edge.arcs):
        for s in range(len(arc) - 1):
            lifted.append((t, Segment(t.apply(arc[s]), t.apply(arc[s + 1]))))

        if a < len(edge.arcs) - 1:
            side = next(iter(surface.sides_of(arc[-1])))
            t = t.compose(surface.crossing_transform(side))

    return lifted


def unroll_to_cover(d: Drawing, k: int) -> List[LiftedSegment]:
    """Lift every edge to the plane, starting in the central tile of a ``(2k+1) x (2k+1)`` window.

    Torus tiles are translates by ``(iW, jH)``. Klein bottle tiles alternate with the
    glide reflection ``y -> H - y`` for every horizontal step.

    Raises
    ------
    surfdraw.exceptions.InputVerificationError
        ``k < 1``.
    surfdraw.exceptions.WindowTooSmallError
        An edge leaves the window.
    surfdraw.exceptions.InvalidDrawingError
        The drawing failed validation.
    """
    if k < 1:
        raise exceptions.InputVerificationError("window must be at least 1")

    require_valid(d)
    result = []
    for e in range(len(d.edges)):
        for t, seg in _lift_edge(d, e):
            i, j = d.surface.tile_of(t)
            if abs(i) > k or abs(j) > k:
                raise exceptions.WindowTooSmallError(f"edge {e} reaches tile {(i, j)} outside a window of {k}")

            result.append(LiftedSegment(edge=e, tile=(i, j), p=seg.p, q=seg.q))

    return result


def _reach(surface: SurfaceSpec, lifted: List[Tuple[DeckTransform, Segment]]) -> int:
    return max(max(abs(c) for c in surface.tile_of(t)) for t, _ in lifted)


def _box(segments: List[Segment]) -> Tuple[Point, Point]:
    xs = [c for s in segments for c in (s.p[0], s.q[0])]
    ys = [c for s in segments for c in (s.p[1], s.q[1])]
    return ((min(xs), min(ys)), (max(xs), max(ys)))


def cover_crossing_count(d: Drawing, e: int, f: int, compute: Optional[ComputeBackend] = None) -> int:
    """Crossings of edges ``e`` and ``f`` counted in the universal cover.

    Sums, over every deck transform near the lift of ``e``, the intersection points of
    that lift with the transformed lift of ``f``. Points that are ends of both lifts
    are a shared vertex and do not count.

    Raises
    ------
    surfdraw.exceptions.InputVerificationError
        ``e == f`` or an index is out of range.
    surfdraw.exceptions.InvalidDrawingError
        The drawing failed validation.
    """
    n = len(d.edges)
    if e == f or not (0 <= e < n and 0 <= f < n):
        raise exceptions.InputVerificationError(f"need two distinct edge indices below {n}, got {e} and {f}")

    require_valid(d, compute=compute)
    return _cover_count(d, e, f)


def cover_crossing_table(d: Drawing, compute: Optional[ComputeBackend] = None) -> Dict[Tuple[int, int], int]:
    """``cover_crossing_count`` for every pair ``e < f``, validating once.
    """
    require_valid(d, compute=compute)
    n = len(d.edges)
    return {(e, f): _cover_count(d, e, f) for e in range(n) for f in range(e + 1, n)}


def _cover_count(d: Drawing, e: int, f: int) -> int:
    surface = d.surface
    lift_e_full = _lift_edge(d, e)
    lift_f_full = _lift_edge(d, f)
    lift_e = [seg for _, seg in lift_e_full]
    lift_f = [seg for _, seg in lift_f_full]
    reach = _reach(surface, lift_e_full) + _reach(surface, lift_f_full) + 1
    (ex0, ey0), (ex1, ey1) = _box(lift_e)
    ends_e = {lift_e[0].p, lift_e[-1].q}
    total = 0
    for i in range(-reach, reach + 1):
        for j in range(-reach, reach + 1):
            g = surface.deck_transform(i, j)
            moved = [Segment(g.apply(s.p), g.apply(s.q)) for s in lift_f]
            (fx0, fy0), (fx1, fy1) = _box(moved)
            if fx1 < ex0 or ex1 < fx0 or fy1 < ey0 or ey1 < fy0:
                continue

            ends_f = {moved[0].p, moved[-1].q}
            points = set()
            for s1 in lift_e:
                for s2 in moved:
                    hit = seg_intersect(s1, s2)
                    if hit.kind != IntersectionKind.POINT:
                        continue

                    if hit.point in ends_e and hit.point in ends_f:
                        continue

                    points.add(hit.point)

            total += len(points)

    return total
