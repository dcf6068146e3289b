from surfdraw import VertexId, parse_drawing
from surfdraw.arrangement import planarize


def test_torus_arrangement(torus_k24):
    arr = planarize(torus_k24)
    assert len(arr.nodes) == 6
    assert len(arr.segments) == 8
    assert arr.crossing_nodes == []
    assert all(seg.signature == 1 for seg in arr.segments)
    assert [arr.degree(n.id) for n in arr.nodes] == [4, 4, 2, 2, 2, 2]


def test_crossings_become_nodes(k45_klein):
    arr = planarize(k45_klein)
    assert len(arr.nodes) == 12
    assert len(arr.segments) == 26
    assert [n.label for n in arr.crossing_nodes] == ["x9", "x10", "x11"]
    assert all(arr.degree(n.id) == 4 for n in arr.crossing_nodes)
    assert sum(len(ring) for ring in arr.rotations.values()) == 2 * len(arr.segments)


def test_klein_gluing_reverses_orientation(k45_klein):
    arr = planarize(k45_klein)
    a4b2 = k45_klein.edge_index(VertexId.parse("a4"), VertexId.parse("b2"))
    pieces = [seg for seg in arr.segments if seg.edge == a4b2]
    assert [seg.signature for seg in pieces] == [-1, 1]


def test_ring_order_is_counter_clockwise(torus_k24):
    arr = planarize(torus_k24)
    a1 = arr.nodes[0]
    assert a1.vertex == VertexId.parse("a1")
    around = [arr.nodes[arr.segments[s].node(1 - k)].label for s, k in arr.rotations[a1.id]]
    assert around == ["b4", "b1", "b2", "b3"]


def test_single_vertex():
    arr = planarize(parse_drawing("surface torus\nrect 4 4\nvertex a1 A 1 1\n"))
    assert len(arr.nodes) == 1
    assert arr.segments == []
