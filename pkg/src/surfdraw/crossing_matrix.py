from typing import List
from typing_extensions import Annotated

from pydantic import BaseModel, ConfigDict, Field, model_validator

from surfdraw.vertex_id import VertexId


class CrossingMatrix(BaseModel):
    """Symmetric matrix of star crossing counts over part ``A``.

    Entry ``(i, j)`` counts crossings between an edge at ``labels[i]`` and an edge at ``labels[j]``.
    The diagonal counts crossing pairs inside one star.
    """
    model_config = ConfigDict(frozen=True)

    labels: Annotated[List[VertexId], Field(description="Row and column labels.")]
    entries: Annotated[List[List[int]], Field(description="Square symmetric nonnegative entries.")]


    @model_validator(mode="after")
    def _check_shape(self) -> "CrossingMatrix":
        n = len(self.labels)
        if len(self.entries) != n or any(len(row) != n for row in self.entries):
            raise ValueError("matrix must be square and match its labels")

        for i in range(n):
            for j in range(n):
                if self.entries[i][j] < 0:
                    raise ValueError("entries must be nonnegative")

                if self.entries[i][j] != self.entries[j][i]:
                    raise ValueError("matrix must be symmetric")

        return self


    @property
    def size(self) -> int:
        return len(self.labels)


    def permuted(self, order: List[int]) -> "CrossingMatrix":
        """Matrix with rows and columns rearranged so that new row ``i`` is old row ``order[i]``.
        """
        return CrossingMatrix(
            labels=[self.labels[i] for i in order],
            entries=[[self.entries[i][j] for j in order] for i in order]
        )


    def render(self) -> str:
        width = max([len(v.name) for v in self.labels] + [len(str(x)) for row in self.entries for x in row] + [1])
        lines = [" " * width + "".join(f" {v.name:>{width}}" for v in self.labels)]
        for v, row in zip(self.labels, self.entries):
            lines.append(f"{v.name:<{width}}" + "".join(f" {x:>{width}}" for x in row))

        return "\n".join(lines)
