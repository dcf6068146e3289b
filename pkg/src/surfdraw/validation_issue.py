from typing import Optional, Tuple
from typing_extensions import Annotated

from pydantic import BaseModel, ConfigDict, Field


class ValidationIssue(BaseModel):
    """One problem found by the validator.

    ``code`` is a stable kebab-case identifier such as ``bad-transit``.
    Location fields are ``None`` when the problem is not tied to an edge.
    """
    model_config = ConfigDict(frozen=True)

    code: Annotated[str, Field(description="Stable identifier of the problem.")]
    message: Annotated[str, Field(description="Human readable detail.")]
    edge: Annotated[Optional[int], Field(description="Index of the offending edge.")] = None
    arc: Annotated[Optional[int], Field(description="Arc index within the edge.")] = None
    segment: Annotated[Optional[int], Field(description="Segment index within the arc.")] = None


    @property
    def sort_key(self) -> Tuple[int, int, int, str, str]:
        return (
            -1 if self.edge is None else self.edge,
            -1 if self.arc is None else self.arc,
            -1 if self.segment is None else self.segment,
            self.code,
            self.message
        )


    def render(self, severity: str) -> str:
        where = ""
        if self.edge is not None:
            where = f" edge {self.edge}"
            if self.arc is not None:
                where += f" arc {self.arc}"

            if self.segment is not None:
                where += f" segment {self.segment}"

        return f"{severity} {self.code}{where}: {self.message}"
