import pydantic
import pytest

from surfdraw import RenderStyle, exceptions, render_svg


def test_counterexample_picture(k45_klein):
    svg = render_svg(k45_klein)
    assert svg.count('data-role="vertex"') == 9
    assert svg.count('data-role="crossing"') == 3
    assert svg.count('data-role="frame"') == 4
    assert svg.count('data-role="edge"') == sum(len(e.arcs) for e in k45_klein.edges)
    assert svg.count('data-role="arrow"') == 6


def test_empty_drawing_is_frame_only(empty_torus):
    svg = render_svg(empty_torus, RenderStyle(show_arrows=False))
    assert svg.count('data-role="frame"') == 4
    for role in ("vertex", "edge", "crossing", "arrow"):
        assert f'data-role="{role}"' not in svg


def test_markers_follow_parts(torus_k24):
    svg = render_svg(torus_k24, RenderStyle(a_marker="square", b_marker="square"))
    assert svg.count("<circle") == 0
    svg = render_svg(torus_k24)
    assert svg.count("<circle") == 2


def test_crossing_marker(k45_klein):
    rings = render_svg(k45_klein)
    crosses = render_svg(k45_klein, RenderStyle(crossing_marker="cross"))
    assert crosses.count('data-role="crossing"') == 3
    assert rings.count("<circle") - crosses.count("<circle") == 3
    assert crosses.count("<path") - rings.count("<path") == 3


def test_rendering_is_deterministic(k45_klein):
    assert render_svg(k45_klein) == render_svg(k45_klein)


def test_scale_changes_picture(torus_k24):
    assert render_svg(torus_k24, RenderStyle(scale=10)) != render_svg(torus_k24)


def test_invalid_drawing_is_not_rendered(bad_transit):
    with pytest.raises(exceptions.InvalidDrawingError):
        render_svg(bad_transit)


@pytest.mark.parametrize(
    "options",
    [
        {"scale": 0},
        {"marker_size": -1},
        {"a_marker": "star"},
        {"crossing_marker": "star"},
    ]
)
def test_bad_style(options):
    with pytest.raises(pydantic.ValidationError):
        RenderStyle(**options)
