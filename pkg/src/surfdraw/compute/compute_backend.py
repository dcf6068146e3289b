from typing import List, Sequence, Tuple

from surfdraw import exceptions
from surfdraw.checks import PairIntersections
from surfdraw.convention import Convention
from surfdraw.drawing import Drawing
from surfdraw.rotation_system import RotationSystem
from surfdraw.system_analysis import SystemAnalysis


class ComputeBackend:
    """Base class for surfdraw compute backends.

    Base classes must at least implement these methods:

        - ``initialize`` - Acquire resources such as worker pools.
        - ``shutdown`` - Release resources.
        - ``edge_pair_intersections`` - Intersect edge pairs of a drawing.
        - ``analyze_rotation_systems`` - Genus, faces and canonical code of rotation systems.

    Results must come back in input order whatever the schedule,
    so every report built on top of a backend is deterministic.

    Parameters
    ----------
    parallel : bool
        Whether the backend runs work outside the calling thread.
        This parameter should not be exposed on the child class.
    """


    def __init__(self, parallel: bool):
        self.parallel = parallel


    def initialize(self) -> None:
        """Acquire backend resources.
        """
        raise exceptions.MethodNotImplementedError()


    def shutdown(self) -> None:
        """Release backend resources.
        """
        raise exceptions.MethodNotImplementedError()


    def edge_pair_intersections(
        self,
        drawing: Drawing,
        pairs: Sequence[Tuple[int, int]]
    ) -> List[PairIntersections]:
        """Intersect the given edge pairs.

        Parameters
        ----------
        drawing : Drawing
            The drawing.
        pairs : Sequence[Tuple[int, int]]
            Edge index pairs ``(e, f)`` with ``e <= f``.
            ``e == f`` checks an edge against itself.

        Returns
        -------
        List[PairIntersections]
            One result per pair, in the order of ``pairs``.
        """
        raise exceptions.MethodNotImplementedError()


    def analyze_rotation_systems(
        self,
        systems: Sequence[RotationSystem],
        convention: Convention
    ) -> List[SystemAnalysis]:
        """Analyze rotation systems for the enumeration.

        Parameters
        ----------
        systems : Sequence[RotationSystem]
            Rotation systems to analyze.
        convention : Convention
            Convention for the canonical codes.

        Returns
        -------
        List[SystemAnalysis]
            One analysis per system, in the order of ``systems``.
        """
        raise exceptions.MethodNotImplementedError()


    def __enter__(self) -> "ComputeBackend":
        self.initialize()
        return self


    def __exit__(self, *args) -> None:
        self.shutdown()
