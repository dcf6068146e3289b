"""Canonical codes of rotation systems.

A code is read by a breadth-first walk from a root dart: vertices are numbered in
discovery order and every rotation is read starting at the neighbor the vertex was
reached from. The smallest code over all root darts is canonical.
"""
from typing import Dict, List, Optional, Tuple, Union

from surfdraw import exceptions
from surfdraw.class_id import ClassId
from surfdraw.convention import Convention
from surfdraw.label_group import LabelGroup
from surfdraw.orientation import Orientation
from surfdraw.rotation_system import RotationSystem, reflect
from surfdraw.vertex_id import VertexId

Code = Tuple[Union[str, int], ...]


def _encode(
    rs: RotationSystem,
    root: VertexId,
    first: Optional[VertexId],
    fixed_labels: bool
) -> Code:
    number: Dict[VertexId, int] = {root: 0}
    entry: Dict[VertexId, Optional[VertexId]] = {root: first}
    order = [root]
    tokens: List[Union[str, int]] = []
    i = 0
    while i < len(order):
        u = order[i]
        i += 1
        rotation = rs.rotations[u]
        k = 0 if entry[u] is None else rotation.index(entry[u])
        tokens.append(u.name if fixed_labels else u.part.value)
        tokens.append(len(rotation))
        for w in rotation[k:] + rotation[:k]:
            if w not in number:
                number[w] = len(order)
                entry[w] = u
                order.append(w)

            tokens.append(number[w])

    if len(order) != len(rs.rotations):
        raise exceptions.DisconnectedGraphError("canonical codes need a connected graph")

    return tuple(tokens)


def oriented_code(rs: RotationSystem, fixed_labels: bool) -> Code:
    """Smallest code over all root darts, without mirroring.
    """
    roots = [(v, w) for v in rs.rotations for w in rs.rotations[v]]
    if len(roots) == 0:
        roots = [(v, None) for v in rs.rotations]

    if len(roots) == 0:
        return ()

    return min(_encode(rs, v, w, fixed_labels) for v, w in roots)


def _text(code: Code) -> str:
    return ".".join(str(token) for token in code)


def canonical_code(rs: RotationSystem, convention: Convention) -> ClassId:
    """Canonical code of a rotation system under a convention.

    Parameters
    ----------
    rs : RotationSystem
        A rotation system of a connected graph.
    convention : Convention
        ``labels=PARTS`` forgets names but keeps parts, ``labels=FIXED`` keeps names.
        ``orientation=REFLECTIVE`` also minimizes over the mirror image.

    Returns
    -------
    ClassId
        Code and chirality. ``chiral`` compares the oriented codes of ``rs`` and its mirror
        under the same label group.

    Raises
    ------
    surfdraw.exceptions.DisconnectedGraphError
        The graph is not connected.

    Examples
    --------
    .. code-block:: python

        from surfdraw import Convention, Orientation, canonical_code
        from surfdraw.rotation_system import reflect

        convention = Convention(orientation=Orientation.REFLECTIVE)
        assert canonical_code(rs, convention) == canonical_code(reflect(rs), convention)
    """
    fixed = convention.labels == LabelGroup.FIXED
    direct = oriented_code(rs, fixed)
    mirrored = oriented_code(reflect(rs), fixed)
    code = direct
    if convention.orientation == Orientation.REFLECTIVE:
        code = min(direct, mirrored)

    return ClassId(code=_text(code), chiral=direct != mirrored)
