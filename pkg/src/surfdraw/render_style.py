from typing_extensions import Annotated

from pydantic import BaseModel, ConfigDict, Field


class RenderStyle(BaseModel):
    """Options for ``render_svg``.

    Parameters
    ----------
    scale : float, default: 4.0
        SVG units per drawing unit.
    show_arrows : bool, default: True
        Draw the arrowheads that show how the sides are glued.
    a_marker : str, default: "disc"
        Marker of part ``A`` vertices, ``disc`` or ``square``.
    b_marker : str, default: "square"
        Marker of part ``B`` vertices, ``disc`` or ``square``.
    crossing_marker : str, default: "ring"
        Marker of crossings, ``ring`` or ``cross``.
    """
    model_config = ConfigDict(frozen=True)

    scale: Annotated[float, Field(description="SVG units per drawing unit.", gt=0)] = 4.0
    show_arrows: Annotated[bool, Field(description="Draw the gluing arrowheads.")] = True
    a_marker: Annotated[str, Field(description="Marker of part A vertices.", pattern="^(disc|square)$")] = "disc"
    b_marker: Annotated[str, Field(description="Marker of part B vertices.", pattern="^(disc|square)$")] = "square"
    crossing_marker: Annotated[str, Field(description="Marker of crossings.", pattern="^(ring|cross)$")] = "ring"
    marker_size: Annotated[float, Field(description="Marker radius in SVG units.", gt=0)] = 4.0
    margin: Annotated[float, Field(description="Space around the frame in SVG units.", ge=0)] = 16.0
