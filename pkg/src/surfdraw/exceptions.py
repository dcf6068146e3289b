"""Module for surfdraw Exceptions
"""
from typing import Optional


class SurfdrawError(Exception):
    """Base surfdraw Exception.
    """
    pass


class CorpusError(SurfdrawError):
    """The audit corpus or its manifest could not be loaded.
    """
    pass


class DisconnectedGraphError(SurfdrawError):
    """The operation needs a connected graph.
    """
    pass


class DrawingParseError(SurfdrawError):
    """The drawing text does not follow the drawing file grammar.

    Parameters
    ----------
    msg : str
        Description of the problem.
    line_number : Optional[int]
        1-based line of the offending declaration, if there is one.
    """

    def __init__(self, msg: str, line_number: Optional[int] = None):
        self.line_number = line_number
        if line_number is not None:
            msg = f"line {line_number}: {msg}"

        super().__init__(msg)


class GraphShapeError(SurfdrawError):
    """The drawing is not the graph the operation expects.
    """
    pass


class InputVerificationError(SurfdrawError):
    """The given inputs could not be verified.
    """
    pass


class InvalidDrawingError(SurfdrawError):
    """The drawing failed validation.

    The failing ``ValidationReport`` is kept on the ``report`` attribute.
    """

    def __init__(self, report, msg: str = "The drawing is not valid."):
        self.report = report
        super().__init__(msg)


class MethodNotImplementedError(SurfdrawError):
    """The given method is not implemented for this class.
    """

    def __init__(self, msg: str = "This method is not implemented.", *args, **kwargs):
        super().__init__(msg, *args, **kwargs)


class NotEmbeddedError(SurfdrawError):
    """The drawing has crossings where a crossing-free drawing is required.
    """
    pass


class SurfaceError(SurfdrawError):
    """A point or direction is not admissible for the surface operation.
    """
    pass


class UnsupportedSurfaceError(SurfdrawError):
    """The operation is not defined for this kind of surface.
    """
    pass


class WindowTooSmallError(SurfdrawError):
    """An edge leaves the tiling window used to unroll the drawing.
    """
    pass
