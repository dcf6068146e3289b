from enum import Enum


class Orientation(Enum):
    """Whether mirror images are identified when classifying embeddings.

        - ``ORIENTED`` - A rotation system and its reflection are different classes unless isomorphic.
        - ``REFLECTIVE`` - A rotation system and its reflection are always the same class.
    """
    ORIENTED = "oriented"
    REFLECTIVE = "reflective"
