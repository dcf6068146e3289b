import re
from typing import Tuple
from typing_extensions import Annotated

from pydantic import BaseModel, ConfigDict, Field, PositiveInt

from surfdraw.part import Part

_NAME = re.compile(r"^([ab])([1-9][0-9]*)$")


class VertexId(BaseModel):
    """A vertex ``a<k>`` or ``b<k>`` of a bipartite graph.

    Orders by part, ``A`` first, then by index.
    """
    model_config = ConfigDict(frozen=True)

    part: Annotated[Part, Field(description="Side of the bipartition.")]
    index: Annotated[PositiveInt, Field(description="1-based index within the part.")]


    @classmethod
    def parse(cls, name: str) -> "VertexId":
        """Build a vertex from its name, ``a3`` or ``b1``.

        Raises
        ------
        ValueError
            The name is not ``a<k>`` or ``b<k>`` with ``k >= 1``.
        """
        match = _NAME.match(name)
        if match is None:
            raise ValueError(f"bad vertex name {name!r}")

        return cls(part=Part(match.group(1).upper()), index=int(match.group(2)))


    @property
    def name(self) -> str:
        return f"{self.part.value.lower()}{self.index}"


    @property
    def sort_key(self) -> Tuple[str, int]:
        return (self.part.value, self.index)


    def __lt__(self, other: "VertexId") -> bool:
        return self.sort_key < other.sort_key


    def __str__(self) -> str:
        return self.name
