from typing import Iterator, Tuple
from typing_extensions import Annotated

from pydantic import BaseModel, ConfigDict, Field

from surfdraw.geometry import Point, Segment
from surfdraw.vertex_id import VertexId

Arc = Tuple[Point, ...]


class EdgeCurve(BaseModel):
    """An edge ``u -> v`` drawn as polyline arcs joined across glued sides.

    ``u`` is in part ``A`` and ``v`` in part ``B``.
    The curve starts at a representative of ``u`` and ends at a representative of ``v``.
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    u: Annotated[VertexId, Field(description="Endpoint in part A.")]
    v: Annotated[VertexId, Field(description="Endpoint in part B.")]
    arcs: Annotated[Tuple[Arc, ...], Field(description="Polylines in rectangle coordinates, consecutive ones joined by a gluing.")]


    @property
    def name(self) -> str:
        return f"{self.u.name}-{self.v.name}"


    @property
    def start(self) -> Point:
        return self.arcs[0][0]


    @property
    def end(self) -> Point:
        return self.arcs[-1][-1]


    @property
    def transits(self) -> int:
        return len(self.arcs) - 1


    def segments(self) -> Iterator[Tuple[int, int, Segment]]:
        """Yield ``(arc index, segment index, segment)`` along the curve.
        """
        for a, arc in enumerate(self.arcs):
            for s in range(len(arc) - 1):
                yield (a, s, Segment(arc[s], arc[s + 1]))


    def is_curve_endpoint(self, arc: int, index: int) -> bool:
        """Whether point ``index`` of arc ``arc`` is where the edge meets ``u`` or ``v``.
        """
        return (
            (arc == 0 and index == 0)
            or (arc == len(self.arcs) - 1 and index == len(self.arcs[arc]) - 1)
        )


    def point_role(self, arc: int, index: int) -> str:
        """``"vertex"``, ``"transit"`` or ``"bend"`` for a polyline point of the curve.
        """
        if self.is_curve_endpoint(arc, index):
            return "vertex"

        if index == 0 or index == len(self.arcs[arc]) - 1:
            return "transit"

        return "bend"


    def shares_endpoint(self, other: "EdgeCurve") -> bool:
        return len({self.u, self.v} & {other.u, other.v}) > 0
