from typing import Dict, Optional, Tuple

from surfdraw import exceptions
from surfdraw.arrangement import build_arrangement
from surfdraw.compute.compute_backend import ComputeBackend
from surfdraw.drawing import Drawing
from surfdraw.rotation_system import RotationSystem
from surfdraw.validation import require_valid
from surfdraw.vertex_id import VertexId


def rotation_system_of(d: Drawing, compute: Optional[ComputeBackend] = None) -> RotationSystem:
    """Read the rotation system of a crossing-free drawing on the torus.

    The order at each vertex is the counter-clockwise order of its edges,
    with directions at non-canonical representatives carried to the canonical one.

    Raises
    ------
    surfdraw.exceptions.UnsupportedSurfaceError
        The drawing is on the Klein bottle.
    surfdraw.exceptions.InvalidDrawingError
        The drawing failed validation.
    surfdraw.exceptions.NotEmbeddedError
        The drawing has crossings.
    """
    if d.surface.is_klein:
        raise exceptions.UnsupportedSurfaceError("rotation systems are only read from torus drawings")

    crossings = require_valid(d, compute=compute).crossings
    if len(crossings) > 0:
        raise exceptions.NotEmbeddedError(f"not-embedded: the drawing has {len(crossings)} crossings")

    arr = build_arrangement(d, crossings)
    rotations: Dict[VertexId, Tuple[VertexId, ...]] = {}
    for node in arr.nodes:
        order = []
        for s, k in arr.rotations[node.id]:
            other = arr.nodes[arr.segments[s].node(1 - k)]
            order.append(other.vertex)

        rotations[node.vertex] = tuple(order)

    return RotationSystem(rotations=rotations)
