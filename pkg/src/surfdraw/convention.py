from typing import List
from typing_extensions import Annotated

from pydantic import BaseModel, ConfigDict, Field

from surfdraw.label_group import LabelGroup
from surfdraw.orientation import Orientation


class Convention(BaseModel):
    """Isomorphism convention for canonical codes.

    Parameters
    ----------
    orientation : Orientation, default: Orientation.ORIENTED
        Whether reflections are identified.
    labels : LabelGroup, default: LabelGroup.PARTS
        Which relabelings are identified.

    Examples
    --------
    .. code-block:: python

        from surfdraw import Convention, LabelGroup, Orientation

        convention = Convention(orientation=Orientation.REFLECTIVE, labels=LabelGroup.PARTS)
        print(convention.name) # reflective/parts
    """
    model_config = ConfigDict(frozen=True)

    orientation: Annotated[Orientation, Field(description="Whether reflections are identified.")] = Orientation.ORIENTED
    labels: Annotated[LabelGroup, Field(description="Which relabelings are identified.")] = LabelGroup.PARTS


    @property
    def name(self) -> str:
        return f"{self.orientation.value}/{self.labels.value}"


    @classmethod
    def all(cls) -> List["Convention"]:
        """Every convention, oriented first, fixed labels before parts.
        """
        return [
            cls(orientation=orientation, labels=labels)
            for orientation in Orientation
            for labels in LabelGroup
        ]
