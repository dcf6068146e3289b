"""Geometric checks of single edges and pairs of edges.

These are the units of work handed to compute backends.
"""
from typing import List, NamedTuple

from surfdraw.drawing import Drawing
from surfdraw.geometry import (
    IntersectionKind,
    Point,
    SegmentPosition,
    point_on_segment,
    seg_intersect
)
from surfdraw.validation_issue import ValidationIssue

# Problems that make segment geometry meaningless; pair checks are skipped when present.
STRUCTURAL_CODES = {"short-arc", "zero-length-segment", "out-of-bounds", "endpoint-mismatch"}


class CrossingRecord(NamedTuple):
    """A transversal crossing of two segment interiors.
    """
    edge_a: int
    arc_a: int
    seg_a: int
    edge_b: int
    arc_b: int
    seg_b: int
    point: Point


class PairIntersections(NamedTuple):
    edge_a: int
    edge_b: int
    crossings: List[CrossingRecord]
    issues: List[ValidationIssue]


def edge_issues(d: Drawing, e: int) -> List[ValidationIssue]:
    """Problems of edge ``e`` that do not involve another edge.
    """
    surface = d.surface
    edge = d.edges[e]
    issues = []

    def issue(code: str, message: str, arc=None, segment=None):
        issues.append(ValidationIssue(code=code, message=message, edge=e, arc=arc, segment=segment))

    for a, arc in enumerate(edge.arcs):
        if len(arc) < 2:
            issue("short-arc", "arc has fewer than two points", arc=a)
            continue

        for i, p in enumerate(arc):
            if not surface.contains(p):
                issue("out-of-bounds", f"point {i} lies outside the rectangle", arc=a, segment=min(i, len(arc) - 2))

        for s in range(len(arc) - 1):
            if arc[s] == arc[s + 1]:
                issue("zero-length-segment", "segment has equal endpoints", arc=a, segment=s)

    if len(issues) > 0:
        return issues

    if surface.identify(edge.start) != d.vertices.get(edge.u):
        issue("endpoint-mismatch", f"curve does not start at {edge.u.name}", arc=0, segment=0)

    if surface.identify(edge.end) != d.vertices.get(edge.v):
        issue("endpoint-mismatch", f"curve does not end at {edge.v.name}", arc=len(edge.arcs) - 1)

    last_arc = len(edge.arcs) - 1
    for a, arc in enumerate(edge.arcs):
        for i in range(1, len(arc) - 1):
            if surface.on_boundary(arc[i]):
                issue("bend-on-boundary", f"bend {i} lies on the rectangle boundary", arc=a, segment=i - 1)

        for s in range(len(arc) - 1):
            if len(surface.sides_of(arc[s]) & surface.sides_of(arc[s + 1])) > 0:
                issue("boundary-segment", "segment runs along a side of the rectangle", arc=a, segment=s)

        ends = []
        if a > 0:
            ends.append((0, arc[0]))

        if a < last_arc:
            ends.append((len(arc) - 2, arc[-1]))

        for segment, p in ends:
            sides = surface.sides_of(p)
            if len(sides) == 0:
                issue("bad-transit", f"arc end {p[0]},{p[1]} is not on the boundary", arc=a, segment=segment)
            elif len(sides) == 2:
                issue("corner-transit", "arc passes through a corner", arc=a, segment=segment)
            elif surface.identify(p) in d.vertices.values():
                issue("vertex-on-edge", "transit point is a vertex", arc=a, segment=segment)

        if a < last_arc:
            sides = surface.sides_of(arc[-1])
            if len(sides) == 1:
                glued = surface.transit(arc[-1], next(iter(sides)))
                if edge.arcs[a + 1][0] != glued:
                    issue(
                        "bad-transit",
                        f"next arc starts at {edge.arcs[a + 1][0][0]},{edge.arcs[a + 1][0][1]}, expected {glued[0]},{glued[1]}",
                        arc=a,
                        segment=len(arc) - 2
                    )

    for v, vp in d.vertices.items():
        for rep in surface.representatives(vp):
            for a, s, seg in edge.segments():
                position = point_on_segment(rep, seg)
                if position == SegmentPosition.INTERIOR:
                    issue("vertex-on-edge", f"vertex {v.name} lies inside a segment", arc=a, segment=s)
                elif position == SegmentPosition.ENDPOINT:
                    index = s if rep == seg.p else s + 1
                    role = edge.point_role(a, index)
                    if role == "bend":
                        issue("vertex-on-edge", f"vertex {v.name} is a bend of the curve", arc=a, segment=s)

    return issues


def pair_intersections(d: Drawing, e: int, f: int) -> PairIntersections:
    """Intersections between edges ``e <= f`` inside the rectangle.

    With ``e == f`` this looks for self intersections.
    """
    first = d.edges[e]
    second = d.edges[f]
    crossings = []
    issues = []
    seen = set()

    def issue(code: str, message: str, arc: int, segment: int):
        key = (code, arc, segment, message)
        if key not in seen:
            seen.add(key)
            issues.append(ValidationIssue(code=code, message=message, edge=e, arc=arc, segment=segment))

    other = f"edge {f} ({second.name})"
    for a1, s1, seg1 in first.segments():
        for a2, s2, seg2 in second.segments():
            if e == f and (a2, s2) <= (a1, s1):
                continue

            hit = seg_intersect(seg1, seg2)
            if hit.kind == IntersectionKind.NONE:
                continue

            if hit.kind == IntersectionKind.DEGENERATE:
                if e == f:
                    issue("degenerate-overlap", "curve overlaps itself", a1, s1)
                else:
                    issue("degenerate-overlap", f"overlaps {other}", a1, s1)

                continue

            m = hit.point
            inside1 = point_on_segment(m, seg1) == SegmentPosition.INTERIOR
            inside2 = point_on_segment(m, seg2) == SegmentPosition.INTERIOR
            if e == f:
                if a1 == a2 and s2 == s1 + 1 and m == seg1.q:
                    continue

                issue("self-intersection", f"curve meets itself at {m[0]},{m[1]}", a1, s1)
                continue

            if inside1 and inside2:
                crossings.append(CrossingRecord(e, a1, s1, f, a2, s2, m))
                continue

            role1 = "interior" if inside1 else first.point_role(a1, s1 if m == seg1.p else s1 + 1)
            role2 = "interior" if inside2 else second.point_role(a2, s2 if m == seg2.p else s2 + 1)
            if role1 == "vertex" and role2 == "vertex":
                continue

            if role1 == "vertex" or role2 == "vertex":
                issue("vertex-on-edge", f"a vertex lies on {other} at {m[0]},{m[1]}", a1, s1)
            elif role1 == "transit" and role2 == "transit":
                issue("boundary-crossing", f"meets {other} on the boundary at {m[0]},{m[1]}", a1, s1)
            else:
                issue("crossing-at-bend", f"meets {other} at a bend or transit at {m[0]},{m[1]}", a1, s1)

    return PairIntersections(e, f, crossings, issues)
