"""Exact rational planar predicates.

Everything here works on ``fractions.Fraction`` coordinates and never rounds.
"""
from enum import Enum
from fractions import Fraction
from functools import cmp_to_key
from typing import NamedTuple, Optional, Sequence, Tuple

Point = Tuple[Fraction, Fraction]
Vector = Tuple[Fraction, Fraction]


class SegmentPosition(Enum):
    """Where a point lies relative to a segment.
    """
    INTERIOR = "interior"
    ENDPOINT = "endpoint"
    OFF = "off"


class IntersectionKind(Enum):
    """Outcome of intersecting two closed segments.

        - ``NONE`` - The segments are disjoint.
        - ``POINT`` - They meet in exactly one point.
        - ``DEGENERATE`` - They overlap along a piece of positive length.
    """
    NONE = "none"
    POINT = "point"
    DEGENERATE = "degenerate"


class Segment(NamedTuple):
    p: Point
    q: Point


class SegmentIntersection(NamedTuple):
    kind: IntersectionKind
    point: Optional[Point] = None


def cross(o: Point, a: Point, b: Point) -> Fraction:
    """Cross product of ``a - o`` and ``b - o``.
    """
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def orient(p: Point, q: Point, r: Point) -> int:
    """Sign of the turn ``p -> q -> r``.

    Returns
    -------
    int
        ``1`` counter-clockwise, ``-1`` clockwise, ``0`` collinear.
    """
    c = cross(p, q, r)
    if c > 0:
        return 1

    if c < 0:
        return -1

    return 0


def point_on_segment(p: Point, s: Segment) -> SegmentPosition:
    if p == s.p or p == s.q:
        return SegmentPosition.ENDPOINT

    if orient(s.p, s.q, p) != 0:
        return SegmentPosition.OFF

    if (
        min(s.p[0], s.q[0]) <= p[0] <= max(s.p[0], s.q[0])
        and min(s.p[1], s.q[1]) <= p[1] <= max(s.p[1], s.q[1])
    ):
        return SegmentPosition.INTERIOR

    return SegmentPosition.OFF


def _param(p: Point, s: Segment) -> Fraction:
    dx = s.q[0] - s.p[0]
    dy = s.q[1] - s.p[1]
    return ((p[0] - s.p[0]) * dx + (p[1] - s.p[1]) * dy) / (dx * dx + dy * dy)


def _at(s: Segment, t: Fraction) -> Point:
    return (s.p[0] + t * (s.q[0] - s.p[0]), s.p[1] + t * (s.q[1] - s.p[1]))


def seg_intersect(s1: Segment, s2: Segment) -> SegmentIntersection:
    """Intersect two closed segments exactly.

    Shared endpoints are reported as a ``POINT``; callers decide what a shared vertex means.

    Parameters
    ----------
    s1 : Segment
        First segment.
    s2 : Segment
        Second segment.

    Returns
    -------
    SegmentIntersection
        The kind of intersection and, for ``POINT``, the exact point.

    Examples
    --------
    .. code-block:: python

        from fractions import Fraction as F

        from surfdraw.geometry import Segment, seg_intersect

        hit = seg_intersect(
            Segment((F(0), F(0)), (F(2), F(2))),
            Segment((F(0), F(2)), (F(2), F(0)))
        )
        print(hit.point) # (Fraction(1, 1), Fraction(1, 1))
    """
    d1 = orient(s2.p, s2.q, s1.p)
    d2 = orient(s2.p, s2.q, s1.q)
    if d1 == 0 and d2 == 0:
        ta = _param(s2.p, s1)
        tb = _param(s2.q, s1)
        lo = max(Fraction(0), min(ta, tb))
        hi = min(Fraction(1), max(ta, tb))
        if lo > hi:
            return SegmentIntersection(IntersectionKind.NONE)

        if lo == hi:
            return SegmentIntersection(IntersectionKind.POINT, _at(s1, lo))

        return SegmentIntersection(IntersectionKind.DEGENERATE)

    d3 = orient(s1.p, s1.q, s2.p)
    d4 = orient(s1.p, s1.q, s2.q)
    if d1 * d2 > 0 or d3 * d4 > 0:
        return SegmentIntersection(IntersectionKind.NONE)

    rx = s1.q[0] - s1.p[0]
    ry = s1.q[1] - s1.p[1]
    sx = s2.q[0] - s2.p[0]
    sy = s2.q[1] - s2.p[1]
    t = ((s2.p[0] - s1.p[0]) * sy - (s2.p[1] - s1.p[1]) * sx) / (rx * sy - ry * sx)
    if t == 0:
        return SegmentIntersection(IntersectionKind.POINT, s1.p)

    if t == 1:
        return SegmentIntersection(IntersectionKind.POINT, s1.q)

    return SegmentIntersection(IntersectionKind.POINT, _at(s1, t))


def segment_param(p: Point, s: Segment) -> Fraction:
    """Position of a point of ``s`` along it, ``0`` at ``s.p`` and ``1`` at ``s.q``.
    """
    return _param(p, s)


def _half(d: Vector) -> int:
    if d[1] > 0 or (d[1] == 0 and d[0] > 0):
        return 0

    return 1


def compare_directions(d1: Vector, d2: Vector) -> int:
    """Compare two nonzero directions by angle in ``[0, 2pi)`` measured from the positive x axis.

    Uses the half-plane then the cross product, no trigonometry.
    """
    h1 = _half(d1)
    h2 = _half(d2)
    if h1 != h2:
        return -1 if h1 < h2 else 1

    c = d1[0] * d2[1] - d1[1] * d2[0]
    if c > 0:
        return -1

    if c < 0:
        return 1

    return 0


direction_key = cmp_to_key(compare_directions)


def signed_area(points: Sequence[Point]) -> Fraction:
    """Shoelace area of a closed polygon, positive when counter-clockwise.
    """
    total = Fraction(0)
    n = len(points)
    for i in range(n):
        x0, y0 = points[i]
        x1, y1 = points[(i + 1) % n]
        total += x0 * y1 - x1 * y0

    return total / 2


def point_in_polygon(p: Point, polygon: Sequence[Point]) -> bool:
    """Even-odd ray test. ``p`` must not lie on the polygon boundary.
    """
    inside = False
    n = len(polygon)
    for i in range(n):
        a = polygon[i]
        b = polygon[(i + 1) % n]
        if (a[1] > p[1]) != (b[1] > p[1]):
            x = a[0] + (p[1] - a[1]) * (b[0] - a[0]) / (b[1] - a[1])
            if p[0] < x:
                inside = not inside

    return inside
