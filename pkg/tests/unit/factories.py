"""Seeded generators of random drawings and matrices for the oracle tests.
"""
from fractions import Fraction
from itertools import permutations
import math
import random
from typing import List, Optional, Set, Tuple

from surfdraw import (
    CrossingMatrix,
    Drawing,
    EdgeCurve,
    Part,
    SurfaceKind,
    SurfaceSpec,
    VertexId,
    validate
)
from surfdraw.crossings import FORBIDDEN_PATTERN
from surfdraw.geometry import Point

GRID = 8
REACH = [(i, j) for i in range(-2, 3) for j in range(-2, 3) if abs(i) + abs(j) <= 3]


def _cuts(lo: Fraction, hi: Fraction, step: Fraction) -> List[Fraction]:
    return [k * step for k in range(math.floor(lo / step), math.ceil(hi / step) + 1)]


def fold_segment(surface: SurfaceSpec, p: Point, q: Point) -> Tuple[Tuple[Point, ...], ...]:
    """Project the plane segment ``p -> q`` onto the rectangle, one arc per tile it passes.
    """
    dx = q[0] - p[0]
    dy = q[1] - p[1]
    params = {Fraction(0), Fraction(1)}
    if dx != 0:
        for x in _cuts(min(p[0], q[0]), max(p[0], q[0]), surface.width):
            t = (x - p[0]) / dx
            if 0 < t < 1:
                params.add(t)

    if dy != 0:
        for y in _cuts(min(p[1], q[1]), max(p[1], q[1]), surface.height):
            t = (y - p[1]) / dy
            if 0 < t < 1:
                params.add(t)

    def at(t: Fraction) -> Point:
        return (p[0] + t * dx, p[1] + t * dy)

    ts = sorted(params)
    arcs = []
    for t0, t1 in zip(ts, ts[1:]):
        a = at(t0)
        b = at(t1)
        mid = ((a[0] + b[0]) / 2, (a[1] + b[1]) / 2)
        tile = surface.deck_transform(math.floor(mid[0] / surface.width), math.floor(mid[1] / surface.height))
        back = tile.inverse()
        arcs.append((back.apply(a), back.apply(b)))

    return tuple(arcs)


def fold_point(surface: SurfaceSpec, p: Point) -> Point:
    """Canonical surface point of the plane point ``p``.
    """
    tile = surface.deck_transform(math.floor(p[0] / surface.width), math.floor(p[1] / surface.height))
    return surface.identify(tile.inverse().apply(p))


def _interior_point(rng: random.Random, surface: SurfaceSpec) -> Point:
    return (
        Fraction(rng.randint(1, int(surface.width) * GRID - 1), GRID),
        Fraction(rng.randint(1, int(surface.height) * GRID - 1), GRID)
    )


def random_drawing(
    rng: random.Random,
    kind: Optional[SurfaceKind] = None,
    max_edges: int = 12
) -> Drawing:
    """Valid drawing of a random ``K_{m,n}`` with ``m * n <= max_edges``.

    Every edge is a straight segment of the universal cover from its ``a`` vertex to a
    copy of its ``b`` vertex. Most copies are at most one tile away; one edge in five may
    reach a tile two steps away, so an edge has at most three transits.
    Invalid draws are thrown away and drawn again.
    """
    for _ in range(1000):
        surface = SurfaceSpec(
            kind=kind if kind is not None else rng.choice(list(SurfaceKind)),
            width=rng.randint(4, 12),
            height=rng.randint(4, 12)
        )
        m = rng.randint(1, 4)
        n = rng.randint(1, max_edges // m)
        names = [VertexId(part=Part.A, index=i) for i in range(1, m + 1)]
        names += [VertexId(part=Part.B, index=i) for i in range(1, n + 1)]
        used: Set[Point] = set()
        vertices = {}
        for v in names:
            p = _interior_point(rng, surface)
            while p in used:
                p = _interior_point(rng, surface)

            used.add(p)
            vertices[v] = p

        edges = []
        for a in names[:m]:
            for b in names[m:]:
                offset = rng.choice(REACH) if rng.random() < 0.2 else (rng.randint(-1, 1), rng.randint(-1, 1))
                g = surface.deck_transform(*offset)
                arcs = fold_segment(surface, vertices[a], g.apply(vertices[b]))
                edges.append(EdgeCurve(u=a, v=b, arcs=arcs))

        d = Drawing(surface=surface, vertices=vertices, edges=tuple(edges))
        if validate(d).valid:
            return d

    raise RuntimeError("no valid random drawing found")


def random_symmetric_matrix(rng: random.Random, n: int) -> CrossingMatrix:
    weights = [0, 0, 0, 1, 1, 2]
    entries = [[0] * n for _ in range(n)]
    for i in range(n):
        entries[i][i] = rng.choice([0, 0, 0, 1])
        for j in range(i + 1, n):
            entries[i][j] = entries[j][i] = rng.choice(weights)

    return CrossingMatrix(
        labels=[VertexId(part=Part.A, index=i) for i in range(1, n + 1)],
        entries=entries
    )


def brute_force_pattern(m: CrossingMatrix) -> Set[Tuple[frozenset, frozenset]]:
    """Every ordered injection of the forbidden pattern, reduced to ``(pair, triple)`` sets.
    """
    found = set()
    for rows in permutations(range(m.size), 5):
        if all(
            m.entries[rows[i]][rows[j]] == FORBIDDEN_PATTERN[i][j]
            for i in range(5)
            for j in range(5)
        ):
            found.add((frozenset(rows[:2]), frozenset(rows[2:])))

    return found
