from typing_extensions import Annotated

from pydantic import BaseModel, ConfigDict, Field

from surfdraw.class_id import ClassId


class SystemAnalysis(BaseModel):
    """What the enumeration needs to know about one rotation system.
    """
    model_config = ConfigDict(frozen=True)

    genus: Annotated[int, Field(description="Orientable genus of the embedding.")]
    faces: Annotated[int, Field(description="Number of faces.")]
    all_b_face: Annotated[bool, Field(description="Some face walk visits every B vertex.")]
    class_id: Annotated[ClassId, Field(description="Canonical code under the requested convention.")]
