from fractions import Fraction
from typing import Dict, List, NamedTuple, Set, Tuple
from typing_extensions import Annotated

from pydantic import BaseModel, ConfigDict, Field, field_validator

from surfdraw import exceptions
from surfdraw.geometry import Point, Vector
from surfdraw.side import Side
from surfdraw.surface_kind import SurfaceKind


# Determinant of the derivative of each gluing map, by surface kind and glued pair.
GLUING_DETERMINANT: Dict[SurfaceKind, Dict[str, int]] = {
    SurfaceKind.TORUS: {"vertical": 1, "horizontal": 1},
    SurfaceKind.KLEIN: {"vertical": -1, "horizontal": 1},
}

_OPPOSITE = {
    Side.LEFT: Side.RIGHT,
    Side.RIGHT: Side.LEFT,
    Side.BOTTOM: Side.TOP,
    Side.TOP: Side.BOTTOM,
}


class DeckTransform(NamedTuple):
    """Isometry of the plane ``(x, y) -> (x + dx, sy * y + dy)``.

    Covering transformations of both surfaces have this shape.
    """
    dx: Fraction
    sy: int
    dy: Fraction


    def apply(self, p: Point) -> Point:
        return (p[0] + self.dx, self.sy * p[1] + self.dy)


    def compose(self, other: "DeckTransform") -> "DeckTransform":
        """``self`` after ``other``.
        """
        return DeckTransform(
            dx=self.dx + other.dx,
            sy=self.sy * other.sy,
            dy=self.sy * other.dy + self.dy
        )


    def inverse(self) -> "DeckTransform":
        return DeckTransform(dx=-self.dx, sy=self.sy, dy=-self.sy * self.dy)


IDENTITY = DeckTransform(Fraction(0), 1, Fraction(0))


class SurfaceSpec(BaseModel):
    """Torus or Klein bottle given as an axis aligned ``W x H`` rectangle with glued sides.

    Horizontal sides are always glued straight.
    Vertical sides are glued straight on the torus and with ``y -> H - y`` on the Klein bottle.
    All four corners are one surface point, stored as ``(0, 0)``.

    Examples
    --------
    .. code-block:: python

        from surfdraw import SurfaceKind, SurfaceSpec

        klein = SurfaceSpec(kind=SurfaceKind.KLEIN, width=4, height=2)
        print(klein.identify((4, "3/2"))) # (Fraction(0, 1), Fraction(1, 2))
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    kind: Annotated[SurfaceKind, Field(description="Gluing pattern of the vertical sides.")]
    width: Annotated[Fraction, Field(description="Rectangle width W.")]
    height: Annotated[Fraction, Field(description="Rectangle height H.")]


    @field_validator("width", "height", mode="before")
    @classmethod
    def _to_fraction(cls, v):
        try:
            v = Fraction(v)
        except (TypeError, ValueError, ZeroDivisionError) as error:
            raise ValueError(f"not a rational number: {v!r}") from error

        if v <= 0:
            raise ValueError("rectangle sides must be positive")

        return v


    @property
    def is_klein(self) -> bool:
        return self.kind == SurfaceKind.KLEIN


    def point(self, x, y) -> Point:
        """Build an exact point, converting ints and strings to ``Fraction``.
        """
        return (Fraction(x), Fraction(y))


    def contains(self, p: Point) -> bool:
        return 0 <= p[0] <= self.width and 0 <= p[1] <= self.height


    def _check(self, p: Point) -> Point:
        p = (Fraction(p[0]), Fraction(p[1]))
        if not self.contains(p):
            raise exceptions.SurfaceError(f"point {p} lies outside the {self.width} x {self.height} rectangle")

        return p


    def sides_of(self, p: Point) -> Set[Side]:
        """Sides of the rectangle the point lies on.
        """
        p = self._check(p)
        sides = set()
        if p[0] == 0:
            sides.add(Side.LEFT)

        if p[0] == self.width:
            sides.add(Side.RIGHT)

        if p[1] == 0:
            sides.add(Side.BOTTOM)

        if p[1] == self.height:
            sides.add(Side.TOP)

        return sides


    def on_boundary(self, p: Point) -> bool:
        return len(self.sides_of(p)) > 0


    def is_corner(self, p: Point) -> bool:
        return len(self.sides_of(p)) == 2


    def identify(self, p: Point) -> Point:
        """Canonical representative of the surface point of ``p``.

        Boundary points get ``x < W`` and ``y < H``; the corners become ``(0, 0)``.

        Raises
        ------
        surfdraw.exceptions.SurfaceError
            The point is outside the closed rectangle.
        """
        x, y = self._check(p)
        if x == self.width:
            x = Fraction(0)
            if self.is_klein:
                y = self.height - y

        if y == self.height:
            y = Fraction(0)

        return (x, y)


    def transit(self, p: Point, side: Side) -> Point:
        """Move a point on ``side`` to the point it is glued to on the opposite side.

        Raises
        ------
        surfdraw.exceptions.SurfaceError
            The point is not on ``side``.
        """
        x, y = self._check(p)
        if side not in self.sides_of((x, y)):
            raise exceptions.SurfaceError(f"point {(x, y)} is not on the {side.value} side")

        if side == Side.LEFT:
            return (self.width, self.height - y if self.is_klein else y)

        if side == Side.RIGHT:
            return (Fraction(0), self.height - y if self.is_klein else y)

        if side == Side.BOTTOM:
            return (x, self.height)

        return (x, Fraction(0))


    def transport_direction(self, d: Vector, side: Side) -> Vector:
        """Push a direction through the gluing of ``side``.

        Raises
        ------
        surfdraw.exceptions.SurfaceError
            The direction is the zero vector.
        """
        dx, dy = Fraction(d[0]), Fraction(d[1])
        if dx == 0 and dy == 0:
            raise exceptions.SurfaceError("cannot transport the zero vector")

        if self.is_klein and side.is_vertical:
            return (dx, -dy)

        return (dx, dy)


    def gluing_determinant(self, side: Side) -> int:
        return GLUING_DETERMINANT[self.kind]["vertical" if side.is_vertical else "horizontal"]


    def opposite(self, side: Side) -> Side:
        return _OPPOSITE[side]


    def representatives(self, p: Point) -> List[Point]:
        """Every rectangle point glued to ``p``, sorted.
        """
        start = self.identify(p)
        seen = {start}
        todo = [start]
        while len(todo) > 0:
            q = todo.pop()
            for side in self.sides_of(q):
                r = self.transit(q, side)
                if r not in seen:
                    seen.add(r)
                    todo.append(r)

        return sorted(seen)


    def chart_flip(self, rep: Point) -> bool:
        """Whether the local chart at this representative is mirrored against the canonical one.

        Only right side representatives on the Klein bottle are mirrored.
        """
        rep = self._check(rep)
        return self.is_klein and rep[0] == self.width


    def to_canonical_direction(self, rep: Point, d: Vector) -> Vector:
        """Express a direction leaving ``rep`` in the chart of the canonical representative.
        """
        if self.chart_flip(rep):
            return self.transport_direction(d, Side.RIGHT)

        return (Fraction(d[0]), Fraction(d[1]))


    def crossing_transform(self, side: Side) -> DeckTransform:
        """Deck transform applied to the lift of the next arc after leaving through ``side``.
        """
        w = self.width
        h = self.height
        if side == Side.RIGHT:
            if self.is_klein:
                return DeckTransform(w, -1, h)

            return DeckTransform(w, 1, Fraction(0))

        if side == Side.LEFT:
            if self.is_klein:
                return DeckTransform(-w, -1, h)

            return DeckTransform(-w, 1, Fraction(0))

        if side == Side.TOP:
            return DeckTransform(Fraction(0), 1, h)

        return DeckTransform(Fraction(0), 1, -h)


    def deck_transform(self, i: int, j: int) -> DeckTransform:
        """Deck transform sending the central rectangle onto tile ``(i, j)``.
        """
        glide = IDENTITY
        step = self.crossing_transform(Side.RIGHT if i >= 0 else Side.LEFT)
        for _ in range(abs(i)):
            glide = step.compose(glide)

        return DeckTransform(Fraction(0), 1, j * self.height).compose(glide)


    def tile_of(self, t: DeckTransform) -> Tuple[int, int]:
        """Tile ``(i, j)`` that ``t`` sends the central rectangle onto.
        """
        cx, cy = t.apply((self.width / 2, self.height / 2))
        return (int((cx - self.width / 2) / self.width), int((cy - self.height / 2) / self.height))
