from enum import Enum


class Part(Enum):
    """Sides of the bipartition.

        - ``A`` - The part whose stars index the star-crossing matrix.
        - ``B`` - The other part.
    """
    A = "A"
    B = "B"
