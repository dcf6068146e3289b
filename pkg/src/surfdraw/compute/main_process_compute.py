from typing import List, Sequence, Tuple

from surfdraw.checks import PairIntersections
from surfdraw.compute import general as gc
from surfdraw.compute.compute_backend import ComputeBackend
from surfdraw.convention import Convention
from surfdraw.drawing import Drawing
from surfdraw.rotation_system import RotationSystem
from surfdraw.system_analysis import SystemAnalysis


class MainProcessCompute(ComputeBackend):
    """Run everything serially in this process.
    """

    def __init__(self):
        super().__init__(parallel=False)


    def initialize(self) -> None:
        """NOOP
        """
        pass


    def shutdown(self) -> None:
        """NOOP
        """
        pass


    def edge_pair_intersections(
        self,
        drawing: Drawing,
        pairs: Sequence[Tuple[int, int]]
    ) -> List[PairIntersections]:
        return gc.pair_intersections_chunk(drawing=drawing, pairs=pairs)


    def analyze_rotation_systems(
        self,
        systems: Sequence[RotationSystem],
        convention: Convention
    ) -> List[SystemAnalysis]:
        return gc.analyze_systems_chunk(systems=systems, convention=convention)
