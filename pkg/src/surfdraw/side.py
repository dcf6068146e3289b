from enum import Enum


class Side(Enum):
    """Sides of the fundamental rectangle.
    """
    LEFT = "left"
    RIGHT = "right"
    BOTTOM = "bottom"
    TOP = "top"


    @property
    def is_vertical(self) -> bool:
        return self in (Side.LEFT, Side.RIGHT)
