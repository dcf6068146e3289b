from enum import Enum


class SurfaceKind(Enum):
    """Kinds of surfaces built from a glued rectangle.

    Both kinds glue the horizontal sides straight, ``(x, 0) ~ (x, H)``.

        - ``TORUS`` - Vertical sides glued straight, ``(0, y) ~ (W, y)``.
        - ``KLEIN`` - Vertical sides glued with a flip, ``(0, y) ~ (W, H - y)``.
    """
    TORUS = "torus"
    KLEIN = "klein"
