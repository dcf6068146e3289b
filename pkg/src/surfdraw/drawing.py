from typing import Dict, List, Optional, Tuple
from typing_extensions import Annotated

from pydantic import BaseModel, ConfigDict, Field, field_validator

from surfdraw.edge_curve import EdgeCurve
from surfdraw.geometry import Point
from surfdraw.part import Part
from surfdraw.surface import SurfaceSpec
from surfdraw.vertex_id import VertexId


class Drawing(BaseModel):
    """A bipartite graph drawn on a torus or Klein bottle.

    Vertex points are canonical surface points.
    Edges are kept sorted by ``(A index, B index)`` so equal drawings compare equal.
    Geometric validity is checked by ``surfdraw.validate``, not on construction.
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    surface: Annotated[SurfaceSpec, Field(description="Surface the graph is drawn on.")]
    vertices: Annotated[Dict[VertexId, Point], Field(description="Canonical point of every vertex.")]
    edges: Annotated[Tuple[EdgeCurve, ...], Field(description="Edge curves.")] = ()


    @field_validator("vertices")
    @classmethod
    def _order_vertices(cls, v: Dict[VertexId, Point]) -> Dict[VertexId, Point]:
        return dict(sorted(v.items(), key=lambda item: item[0].sort_key))


    @field_validator("edges")
    @classmethod
    def _order_edges(cls, v: Tuple[EdgeCurve, ...]) -> Tuple[EdgeCurve, ...]:
        return tuple(sorted(v, key=lambda e: (e.u.index, e.v.index)))


    def part(self, part: Part) -> List[VertexId]:
        return [v for v in self.vertices if v.part == part]


    @property
    def a_vertices(self) -> List[VertexId]:
        return self.part(Part.A)


    @property
    def b_vertices(self) -> List[VertexId]:
        return self.part(Part.B)


    def incident_edges(self, v: VertexId) -> List[int]:
        return [i for i, e in enumerate(self.edges) if v in (e.u, e.v)]


    def edge_index(self, u: VertexId, v: VertexId) -> Optional[int]:
        for i, e in enumerate(self.edges):
            if e.u == u and e.v == v:
                return i

        return None


    def is_complete_bipartite(self) -> bool:
        """Exactly one edge between every ``a_i`` and ``b_j`` and no others.
        """
        pairs = [(e.u, e.v) for e in self.edges]
        expected = {(a, b) for a in self.a_vertices for b in self.b_vertices}
        return len(pairs) == len(set(pairs)) and set(pairs) == expected


    def vertex_at(self, p: Point) -> Optional[VertexId]:
        """Vertex whose surface point is the canonical point ``p``.
        """
        for v, q in self.vertices.items():
            if q == p:
                return v

        return None
