from enum import Enum


class LabelGroup(Enum):
    """Relabelings allowed when classifying embeddings.

        - ``FIXED`` - Vertex labels are part of the structure.
        - ``PARTS`` - Any relabeling that keeps every vertex in its part.
    """
    FIXED = "fixed"
    PARTS = "parts"
