import hashlib
from typing_extensions import Annotated

from pydantic import BaseModel, ConfigDict, Field


class ClassId(BaseModel):
    """Canonical code of an isomorphism class of rotation systems.

    Equal codes mean isomorphic under the convention the code was built with.
    """
    model_config = ConfigDict(frozen=True)

    code: Annotated[str, Field(description="Canonical code.")]
    chiral: Annotated[bool, Field(description="The class differs from its mirror image.")]


    @property
    def digest(self) -> str:
        """Short stable hash of the code for reports.
        """
        return hashlib.sha1(self.code.encode()).hexdigest()[:12]
