from typing import Dict, Iterator, List, Mapping, NamedTuple, Tuple
from typing_extensions import Annotated

import networkx as nx
from pydantic import BaseModel, ConfigDict, Field, field_validator

from surfdraw import exceptions
from surfdraw.part import Part
from surfdraw.vertex_id import VertexId

Dart = Tuple[VertexId, VertexId]


class RotationSystem(BaseModel):
    """Cyclic order of neighbors around every vertex of a simple graph.

    Orders are read counter-clockwise.
    Two systems are equal when every cyclic order is equal up to rotation;
    compare ``normalized()`` systems for that.

    Examples
    --------
    .. code-block:: python

        from surfdraw import RotationSystem, VertexId

        a1, a2, b1, b2 = (VertexId.parse(n) for n in ("a1", "a2", "b1", "b2"))
        cycle = RotationSystem(rotations={a1: (b1, b2), a2: (b1, b2), b1: (a1, a2), b2: (a1, a2)})
    """
    model_config = ConfigDict(frozen=True)

    rotations: Annotated[
        Dict[VertexId, Tuple[VertexId, ...]],
        Field(description="Counter-clockwise neighbor order at each vertex.")
    ]


    @field_validator("rotations")
    @classmethod
    def _check_symmetric(cls, v: Dict[VertexId, Tuple[VertexId, ...]]) -> Dict[VertexId, Tuple[VertexId, ...]]:
        for u, order in v.items():
            if len(set(order)) != len(order):
                raise ValueError(f"repeated neighbor around {u.name}; only simple graphs are supported")

            for w in order:
                if w not in v or u not in v[w]:
                    raise ValueError(f"{u.name} lists {w.name} but not the other way around")

        return dict(sorted(v.items(), key=lambda item: item[0].sort_key))


    @property
    def vertices(self) -> List[VertexId]:
        return list(self.rotations)


    @property
    def edge_count(self) -> int:
        return sum(len(order) for order in self.rotations.values()) // 2


    def darts(self) -> Iterator[Dart]:
        for u, order in self.rotations.items():
            for w in order:
                yield (u, w)


    def successor(self, v: VertexId, u: VertexId) -> VertexId:
        """Neighbor after ``u`` in the rotation at ``v``.
        """
        order = self.rotations[v]
        return order[(order.index(u) + 1) % len(order)]


    def normalized(self) -> "RotationSystem":
        """Same system with every order rotated to start at its smallest neighbor.
        """
        rotations = {}
        for v, order in self.rotations.items():
            if len(order) == 0:
                rotations[v] = order
                continue

            k = order.index(min(order))
            rotations[v] = order[k:] + order[:k]

        return RotationSystem(rotations=rotations)


    def literal(self) -> str:
        """Compact text such as ``a1:(b1 b2 b3 b4) a2:(b1 b3 b2 b4)``, listing part A only when part B is all degree two.
        """
        normal = self.normalized()
        shown = [v for v in normal.rotations if len(normal.rotations[v]) > 2 or v.part == Part.A]
        return " ".join(
            f"{v.name}:({' '.join(w.name for w in normal.rotations[v])})"
            for v in shown
        )


    def to_graph(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(self.rotations)
        graph.add_edges_from(self.darts())
        return graph


class RotationFaces(NamedTuple):
    count: int
    walks: List[List[Dart]]


def faces_of_rotation(rs: RotationSystem) -> RotationFaces:
    """Trace the faces of a rotation system.

    From dart ``(u, v)`` the walk continues with ``(v, w)`` where ``w`` follows ``u``
    in the rotation at ``v``. Every dart ends up in exactly one walk.
    """
    used = set()
    walks = []
    for start in rs.darts():
        if start in used:
            continue

        walk = []
        dart = start
        while dart not in used:
            used.add(dart)
            walk.append(dart)
            u, v = dart
            dart = (v, rs.successor(v, u))

        walks.append(walk)

    return RotationFaces(len(walks), walks)


def genus_of(rs: RotationSystem) -> int:
    """Orientable genus of the surface the rotation system embeds the graph in.

    Raises
    ------
    surfdraw.exceptions.DisconnectedGraphError
        The graph is empty or not connected.
    """
    graph = rs.to_graph()
    if graph.number_of_nodes() == 0 or not nx.is_connected(graph):
        raise exceptions.DisconnectedGraphError("genus is only defined here for connected graphs")

    faces = max(faces_of_rotation(rs).count, 1)
    euler = graph.number_of_nodes() - graph.number_of_edges() + faces
    return (2 - euler) // 2


def reflect(rs: RotationSystem) -> RotationSystem:
    """Mirror image: every cyclic order reversed.
    """
    return RotationSystem(rotations={v: tuple(reversed(order)) for v, order in rs.rotations.items()})


def relabel(rs: RotationSystem, mapping: Mapping[VertexId, VertexId]) -> RotationSystem:
    """Rename vertices. Vertices missing from ``mapping`` keep their names.
    """
    def name(v: VertexId) -> VertexId:
        return mapping.get(v, v)

    return RotationSystem(
        rotations={name(v): tuple(name(w) for w in order) for v, order in rs.rotations.items()}
    )
