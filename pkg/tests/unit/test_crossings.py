from fractions import Fraction as F
import random

import pytest

from surfdraw import (
    CrossingMatrix,
    VertexId,
    certify_counterexample,
    crossing_inventory,
    edge_crossings,
    exceptions,
    find_forbidden_pattern,
    parse_drawing,
    star_crossing_matrix
)
from surfdraw.crossings import FORBIDDEN_PATTERN, render_certificate
from tests.unit.factories import brute_force_pattern, random_symmetric_matrix


def names(*vertex_names):
    return tuple(VertexId.parse(n) for n in vertex_names)


def test_counterexample_matrix(k45_klein):
    m = star_crossing_matrix(k45_klein)
    assert list(m.labels) == list(names("a1", "a2", "a3", "a4", "a5"))
    assert [list(row) for row in m.entries] == [list(row) for row in FORBIDDEN_PATTERN]


def test_counterexample_crossings(k45_klein):
    inventory = crossing_inventory(k45_klein)
    assert len(inventory) == 3
    stars = {(k45_klein.edges[c.edge_a].u.name, k45_klein.edges[c.edge_b].u.name) for c in inventory}
    assert stars == {("a3", "a4"), ("a3", "a5"), ("a4", "a5")}

    a4b2 = k45_klein.edge_index(*names("a4", "b2"))
    a5b3 = k45_klein.edge_index(*names("a5", "b3"))
    hit = edge_crossings(k45_klein, a5b3, a4b2)
    assert hit.count == 1
    assert hit.points == [(F(4200, 173), F(5785, 173))]


def test_edge_crossings_rejects_same_edge(k45_klein):
    with pytest.raises(exceptions.InputVerificationError):
        edge_crossings(k45_klein, 3, 3)

    with pytest.raises(exceptions.InputVerificationError):
        edge_crossings(k45_klein, 0, 20)


def test_certify_counterexample(k45_klein):
    report = certify_counterexample(k45_klein)
    assert report.verdict
    assert report.reasons == []
    assert len(report.matches) == 1
    assert report.matches[0].pair == names("a1", "a2")
    assert report.matches[0].triple == names("a3", "a4", "a5")
    text = render_certificate(report)
    assert text.startswith("verdict: true\nreasons: none\nsurface: klein\ngraph: K_{5,4}\n")
    assert "  pair {a1, a2} triple {a3, a4, a5}\n" in text
    assert "  a4-b2 x a5-b3: 1\n" in text
    assert "crossings: 3\n" in text
    assert text.endswith("warnings: none\n")


def test_rerouted_drawing_loses_the_pattern(k45_klein_rerouted):
    report = certify_counterexample(k45_klein_rerouted)
    assert not report.verdict
    assert report.reasons == ["pattern-absent"]
    assert sum(n for _, _, n in report.inventory) == 2


def test_certify_reasons(torus_k24, bad_transit):
    assert certify_counterexample(torus_k24).reasons == ["wrong-surface", "matrix-too-small"]
    assert certify_counterexample(bad_transit).reasons == ["wrong-surface", "wrong-b-part-size", "invalid-drawing"]


def test_diagonal_counts_crossings_inside_a_star():
    d = parse_drawing(
        "surface torus\nrect 8 8\n"
        "vertex a1 A 1 2\nvertex b1 B 6 6\nvertex b2 B 6 2\n"
        "edge a1 b1 : 1,2 6,6\nedge a1 b2 : 1,2 5,7 6,2\n"
    )
    assert star_crossing_matrix(d).entries == [[1]]


def test_pattern_needs_five_rows():
    m = CrossingMatrix(labels=list(names("a1", "a2", "a3", "a4")), entries=[[0] * 4 for _ in range(4)])
    assert find_forbidden_pattern(m) == []


def test_every_placement_is_listed():
    entries = [[0] * 6 for _ in range(6)]
    for i in (1, 3, 4):
        for j in (1, 3, 4):
            if i != j:
                entries[i][j] = 1

    m = CrossingMatrix(labels=list(names("a1", "a2", "a3", "a4", "a5", "a6")), entries=entries)
    matches = find_forbidden_pattern(m)
    assert [(x.pair, x.triple) for x in matches] == [
        (names("a1", "a3"), names("a2", "a4", "a5")),
        (names("a1", "a6"), names("a2", "a4", "a5")),
        (names("a3", "a6"), names("a2", "a4", "a5")),
    ]


def test_matrix_must_be_symmetric():
    with pytest.raises(ValueError):
        CrossingMatrix(labels=list(names("a1", "a2")), entries=[[0, 1], [0, 0]])


def test_pattern_search_matches_brute_force():
    rng = random.Random(20261018)
    for _ in range(200):
        m = random_symmetric_matrix(rng, rng.randint(1, 8))
        index = {v: i for i, v in enumerate(m.labels)}
        found = {
            (frozenset(index[v] for v in x.pair), frozenset(index[v] for v in x.triple))
            for x in find_forbidden_pattern(m)
        }
        assert found == brute_force_pattern(m)
