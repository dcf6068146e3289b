from fractions import Fraction as F
import random

import pytest
from pydantic import ValidationError

from surfdraw import Side, SurfaceKind, SurfaceSpec, exceptions
from surfdraw.surface import IDENTITY, DeckTransform


@pytest.fixture
def torus():
    return SurfaceSpec(kind=SurfaceKind.TORUS, width=8, height=6)


@pytest.fixture
def klein():
    return SurfaceSpec(kind=SurfaceKind.KLEIN, width=8, height=6)


def P(x, y):
    return (F(x), F(y))


def test_sides_must_be_positive():
    with pytest.raises(ValidationError):
        SurfaceSpec(kind=SurfaceKind.TORUS, width=0, height=1)

    assert SurfaceSpec(kind=SurfaceKind.TORUS, width="5/2", height=1).width == F(5, 2)


def test_identify(torus, klein):
    assert torus.identify(P(8, 2)) == P(0, 2)
    assert klein.identify(P(8, 2)) == P(0, 4)
    assert torus.identify(P(3, 6)) == P(3, 0)
    assert klein.identify(P(3, 6)) == P(3, 0)
    for corner in [P(0, 0), P(8, 0), P(0, 6), P(8, 6)]:
        assert torus.identify(corner) == P(0, 0)
        assert klein.identify(corner) == P(0, 0)

    assert klein.identify(P(3, 2)) == P(3, 2)


def test_outside_rectangle(torus):
    with pytest.raises(exceptions.SurfaceError):
        torus.identify(P(9, 1))


def test_transit(torus, klein):
    assert torus.transit(P(0, 2), Side.LEFT) == P(8, 2)
    assert klein.transit(P(0, 2), Side.LEFT) == P(8, 4)
    assert klein.transit(P(8, 1), Side.RIGHT) == P(0, 5)
    assert klein.transit(P(3, 0), Side.BOTTOM) == P(3, 6)
    with pytest.raises(exceptions.SurfaceError):
        klein.transit(P(3, 2), Side.LEFT)


def test_transport_direction(torus, klein):
    assert torus.transport_direction(P(1, 2), Side.RIGHT) == P(1, 2)
    assert klein.transport_direction(P(1, 2), Side.RIGHT) == P(1, -2)
    assert klein.transport_direction(P(1, 2), Side.TOP) == P(1, 2)
    assert klein.gluing_determinant(Side.LEFT) == -1
    assert klein.gluing_determinant(Side.TOP) == 1
    assert torus.gluing_determinant(Side.LEFT) == 1
    with pytest.raises(exceptions.SurfaceError):
        klein.transport_direction(P(0, 0), Side.RIGHT)


def test_representatives(klein):
    assert klein.representatives(P(3, 2)) == [P(3, 2)]
    assert klein.representatives(P(8, 1)) == [P(0, 5), P(8, 1)]
    assert klein.representatives(P(3, 6)) == [P(3, 0), P(3, 6)]
    assert len(klein.representatives(P(0, 0))) == 4


def test_chart_flip(torus, klein):
    assert klein.chart_flip(P(8, 1))
    assert not klein.chart_flip(P(0, 5))
    assert not torus.chart_flip(P(8, 1))
    assert klein.to_canonical_direction(P(8, 1), P(-1, 1)) == P(-1, -1)


@pytest.mark.parametrize("side", list(Side))
def test_crossing_transform_undoes_transit(klein, torus, side):
    points = {Side.LEFT: P(0, 1), Side.RIGHT: P(8, 1), Side.BOTTOM: P(3, 0), Side.TOP: P(3, 6)}
    for surface in (torus, klein):
        p = points[side]
        assert surface.crossing_transform(side).apply(surface.transit(p, side)) == p


def test_deck_transforms(klein):
    assert klein.deck_transform(0, 0) == IDENTITY
    assert klein.deck_transform(1, 0) == klein.crossing_transform(Side.RIGHT)
    for i in range(-2, 3):
        for j in range(-2, 3):
            t = klein.deck_transform(i, j)
            assert klein.tile_of(t) == (i, j)
            assert t.compose(t.inverse()) == IDENTITY


def test_glide_squares_to_translation(klein):
    glide = klein.deck_transform(1, 0)
    assert glide.compose(glide) == DeckTransform(F(16), 1, F(0))


def _boundary_point(rng, surface, side):
    t = F(rng.randint(0, 48), 48)
    if side == Side.LEFT:
        return (F(0), t * surface.height)

    if side == Side.RIGHT:
        return (surface.width, t * surface.height)

    if side == Side.BOTTOM:
        return (t * surface.width, F(0))

    return (t * surface.width, surface.height)


def test_identification_is_consistent(torus, klein):
    rng = random.Random("identify")
    for surface in (torus, klein):
        for _ in range(200):
            side = rng.choice(list(Side))
            p = _boundary_point(rng, surface, side)
            q = surface.transit(p, side)
            assert surface.opposite(side) in surface.sides_of(q)
            assert surface.transit(q, surface.opposite(side)) == p
            assert surface.identify(q) == surface.identify(p)
            assert surface.identify(surface.identify(p)) == surface.identify(p)
            reps = surface.representatives(p)
            assert p in reps and q in reps
            assert {surface.identify(r) for r in reps} == {surface.identify(p)}

            inner = (F(rng.randint(1, 95), 12), F(rng.randint(1, 71), 12))
            assert surface.identify(inner) == inner
            assert surface.representatives(inner) == [inner]
