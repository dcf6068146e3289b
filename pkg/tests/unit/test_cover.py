from collections import Counter
from fractions import Fraction as F
import random

import pytest

from surfdraw import SurfaceKind, VertexId, cover_crossing_count, exceptions, parse_drawing, unroll_to_cover
from surfdraw.cover import cover_crossing_table
from surfdraw.validation import analyze_drawing
from tests.unit.factories import random_drawing

WINDING = (
    "surface torus\nrect 4 4\n"
    "vertex a1 A 1 2\nvertex b1 B 1 15/4\n"
    "edge a1 b1 : 1,2 4,3 | 0,3 4,7/2 | 0,7/2 1,15/4\n"
)


def test_unroll_counterexample(k45_klein):
    lifted = [s for s in unroll_to_cover(k45_klein, 1) if s.edge == k45_klein.edge_index(VertexId.parse("a4"), VertexId.parse("b2"))]
    assert [s.tile for s in lifted] == [(0, 0), (1, 0)]
    assert (lifted[1].p, lifted[1].q) == ((F(100), F(25)), (F(150), F(90)))


def test_unroll_window():
    d = parse_drawing(WINDING)
    with pytest.raises(exceptions.InputVerificationError):
        unroll_to_cover(d, 0)

    with pytest.raises(exceptions.WindowTooSmallError):
        unroll_to_cover(d, 1)

    assert [s.tile for s in unroll_to_cover(d, 2)] == [(0, 0), (1, 0), (2, 0)]


def test_cover_counts_counterexample(k45_klein):
    table = cover_crossing_table(k45_klein)
    a4b2 = k45_klein.edge_index(VertexId.parse("a4"), VertexId.parse("b2"))
    a5b3 = k45_klein.edge_index(VertexId.parse("a5"), VertexId.parse("b3"))
    assert sum(table.values()) == 3
    assert table[(a4b2, a5b3)] == 1
    assert cover_crossing_count(k45_klein, a5b3, a4b2) == 1


def test_cover_count_rejects_bad_input(k45_klein, bad_transit):
    with pytest.raises(exceptions.InputVerificationError):
        cover_crossing_count(k45_klein, 2, 2)

    with pytest.raises(exceptions.InvalidDrawingError):
        cover_crossing_table(bad_transit)


@pytest.mark.parametrize("kind", list(SurfaceKind))
def test_cover_matches_rectangle_counts(kind):
    rng = random.Random(f"cover-{kind.value}")
    longest = 0
    for _ in range(50):
        d = random_drawing(rng, kind=kind)
        assert d.surface.kind == kind
        longest = max([longest] + [len(e.arcs) for e in d.edges])
        counts = Counter((c.edge_a, c.edge_b) for c in analyze_drawing(d).crossings)
        table = cover_crossing_table(d)
        for pair, n in table.items():
            assert n == counts.get(pair, 0), (pair, d)

    assert longest == 4
