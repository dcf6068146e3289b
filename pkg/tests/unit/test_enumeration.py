import pytest

from surfdraw import (
    Convention,
    LabelGroup,
    Orientation,
    classify_drawing,
    enumerate_k24_torus,
    enumerate_k24_torus_full,
    exceptions,
    load_drawing,
    planar_face_b_counts,
    rotation_system_of
)
from surfdraw.enumeration import k24_linear_orders, k24_rotation_systems, mirror_code, render_enumeration


@pytest.mark.parametrize(
    "convention, classes, chiral_pairs",
    [
        (Convention(), 2, 0),
        (Convention(orientation=Orientation.REFLECTIVE), 2, 0),
        (Convention(labels=LabelGroup.FIXED), 30, 15),
        (Convention(orientation=Orientation.REFLECTIVE, labels=LabelGroup.FIXED), 15, 15),
    ]
)
def test_class_counts(convention, classes, chiral_pairs, compute):
    result = enumerate_k24_torus(convention, compute=compute)
    assert result.examined == 36
    assert result.genus1_cellular == 30
    assert result.passing_filter == 30
    assert len(result.classes) == classes
    assert result.chiral_pairs == chiral_pairs
    assert sum(c.multiplicity for c in result.classes) == result.passing_filter


def test_class_multiplicities():
    assert sorted(c.multiplicity for c in enumerate_k24_torus().classes) == [6, 24]
    reflective_fixed = Convention(orientation=Orientation.REFLECTIVE, labels=LabelGroup.FIXED)
    assert {c.multiplicity for c in enumerate_k24_torus(reflective_fixed).classes} == {2}


def test_classes_sorted_by_code():
    codes = [c.class_id.code for c in enumerate_k24_torus(Convention(labels=LabelGroup.FIXED)).classes]
    assert codes == sorted(codes)
    assert len(set(codes)) == len(codes)


def test_sample_spaces():
    assert len(k24_rotation_systems()) == 36
    assert len(k24_linear_orders()) == 576
    assert len({rs.normalized().literal() for rs in k24_linear_orders()}) == 36


def test_full_enumeration_agrees(compute):
    for convention in Convention.all():
        fixed_first = enumerate_k24_torus(convention, compute=compute)
        full = enumerate_k24_torus_full(convention, compute=compute)
        assert full.examined == 576
        assert full.genus1_cellular == 480
        assert full.passing_filter == 480
        assert [c.class_id for c in full.classes] == [c.class_id for c in fixed_first.classes]
        assert [c.multiplicity for c in full.classes] == [16 * c.multiplicity for c in fixed_first.classes]


def test_planar_faces_see_two_b_vertices():
    counts = planar_face_b_counts()
    assert len(counts) == 6
    assert counts == [[2, 2, 2, 2]] * 6


def test_enumeration_is_deterministic():
    assert enumerate_k24_torus() == enumerate_k24_torus()


def test_classify_drawing(torus_k24, fixtures_dir):
    class_id = classify_drawing(torus_k24)
    classes = {c.class_id: c for c in enumerate_k24_torus().classes}
    assert classes[class_id].multiplicity == 24

    relabeled = load_drawing(fixtures_dir / "cellular_relabel_1.tgd")
    assert classify_drawing(relabeled) == class_id
    fixed = Convention(labels=LabelGroup.FIXED)
    assert classify_drawing(relabeled, fixed) != classify_drawing(torus_k24, fixed)


def test_mirror_code(torus_k24):
    rs = rotation_system_of(torus_k24)
    fixed = Convention(labels=LabelGroup.FIXED)
    assert mirror_code(rs, fixed) != classify_drawing(torus_k24, fixed)
    assert mirror_code(rs, Convention()) == classify_drawing(torus_k24)


def test_classify_needs_k24_on_torus(k45_klein, k22_annulus):
    with pytest.raises(exceptions.UnsupportedSurfaceError):
        classify_drawing(k45_klein)

    with pytest.raises(exceptions.GraphShapeError):
        classify_drawing(k22_annulus)


def test_render_enumeration():
    text = render_enumeration(enumerate_k24_torus())
    lines = text.splitlines()
    assert lines[:6] == [
        "convention: oriented/parts",
        "examined: 36",
        "genus1_cellular: 30",
        "passing_filter: 30",
        "classes: 2",
        "chiral_pairs: 0",
    ]
    assert len(lines) == 8
    assert all(line.startswith("class ") and "chiral=false" in line for line in lines[6:])
