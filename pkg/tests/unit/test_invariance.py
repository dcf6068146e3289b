from collections import Counter, defaultdict
from fractions import Fraction as F

import pytest

from surfdraw import (
    Drawing,
    EdgeCurve,
    SurfaceKind,
    SurfaceSpec,
    all_b_faces,
    edge_crossings,
    euler_report,
    load_drawing,
    star_crossing_matrix,
    unroll_to_cover,
    validate
)
from surfdraw.validation import analyze_drawing
from tests.unit.factories import fold_point, fold_segment

NAMES = [
    "k45_klein_counterexample.tgd",
    "torus_k24_cellular.tgd",
    "planar_k24.tgd",
    "k22_annulus.tgd"
]


def summary(d):
    report = validate(d)
    pairs = Counter((c.edge_a, c.edge_b) for c in analyze_drawing(d).crossings)
    return (
        report.valid,
        report.crossings,
        pairs,
        star_crossing_matrix(d),
        euler_report(d),
        len(all_b_faces(d))
    )


def scaled(d, c):
    def move(p):
        return (p[0] * c, p[1] * c)

    return Drawing(
        surface=SurfaceSpec(kind=d.surface.kind, width=d.surface.width * c, height=d.surface.height * c),
        vertices={v: move(p) for v, p in d.vertices.items()},
        edges=tuple(
            EdgeCurve(u=e.u, v=e.v, arcs=tuple(tuple(move(p) for p in arc) for arc in e.arcs))
            for e in d.edges
        )
    )


def lerp(p, q, t):
    return (p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1]))


def subdivided(d):
    taken = {c.point for c in analyze_drawing(d).crossings}
    edges = []
    for e in d.edges:
        arcs = []
        for arc in e.arcs:
            points = [arc[0]]
            for p, q in zip(arc, arc[1:]):
                t = next(t for t in (F(1, 2), F(1, 3), F(2, 5), F(3, 7)) if lerp(p, q, t) not in taken)
                points += [lerp(p, q, t), q]

            arcs.append(tuple(points))

        edges.append(EdgeCurve(u=e.u, v=e.v, arcs=tuple(arcs)))

    return Drawing(surface=d.surface, vertices=d.vertices, edges=tuple(edges))


def plane_points(d):
    lifted = unroll_to_cover(d, 3)
    points = [s.p for s in lifted] + [s.q for s in lifted]
    points += list(d.vertices.values())
    points += [c.point for c in analyze_drawing(d).crossings]
    return points


def shift_for(d, axis):
    """A shift along ``axis`` that puts no vertex, bend, transit or crossing on a side.
    """
    size = d.surface.width if axis == 0 else d.surface.height
    points = plane_points(d)
    for k in range(1, 11):
        t = size * F(k, 11)
        if all((p[axis] + t) % size != 0 for p in points):
            return t

    raise AssertionError("no clean shift")


def translated(d, axis, t):
    surface = d.surface

    def move(p):
        return (p[0] + t, p[1]) if axis == 0 else (p[0], p[1] + t)

    lifted = defaultdict(list)
    for s in unroll_to_cover(d, 3):
        lifted[s.edge].append(s)

    edges = []
    for i, e in enumerate(d.edges):
        arcs = []
        for s in lifted[i]:
            for piece in fold_segment(surface, move(s.p), move(s.q)):
                if len(arcs) > 0 and arcs[-1][-1] == piece[0]:
                    arcs[-1].append(piece[1])
                else:
                    arcs.append(list(piece))

        edges.append(EdgeCurve(u=e.u, v=e.v, arcs=tuple(tuple(arc) for arc in arcs)))

    return Drawing(
        surface=surface,
        vertices={v: fold_point(surface, move(p)) for v, p in d.vertices.items()},
        edges=tuple(edges)
    )


@pytest.mark.parametrize("name", NAMES)
def test_rescaling(fixtures_dir, name):
    d = load_drawing(fixtures_dir / name)
    c = F(3, 7)
    s = scaled(d, c)
    result = summary(s)
    assert result == summary(d)
    assert result[0]
    for e, f in result[2]:
        assert edge_crossings(s, e, f).points == [(x * c, y * c) for x, y in edge_crossings(d, e, f).points]


@pytest.mark.parametrize("name", NAMES)
def test_subdivision(fixtures_dir, name):
    d = load_drawing(fixtures_dir / name)
    s = subdivided(d)
    assert sum(len(arc) for e in s.edges for arc in e.arcs) > sum(len(arc) for e in d.edges for arc in e.arcs)
    result = summary(s)
    assert result == summary(d)
    assert result[0]


@pytest.mark.parametrize("name", NAMES)
def test_translation(fixtures_dir, name):
    d = load_drawing(fixtures_dir / name)
    expected = summary(d)
    axes = [0] if d.surface.kind == SurfaceKind.KLEIN else [0, 1]
    for axis in axes:
        moved = translated(d, axis, shift_for(d, axis))
        assert moved.vertices != d.vertices
        assert summary(moved) == expected, axis
