from typing import List, Sequence, Tuple

from loguru import logger

from surfdraw.canonical import canonical_code
from surfdraw.checks import PairIntersections, pair_intersections
from surfdraw.convention import Convention
from surfdraw.drawing import Drawing
from surfdraw.part import Part
from surfdraw.rotation_system import RotationSystem, faces_of_rotation, genus_of
from surfdraw.system_analysis import SystemAnalysis


def pair_intersections_chunk(
    drawing: Drawing,
    pairs: Sequence[Tuple[int, int]]
) -> List[PairIntersections]:
    logger.debug(f"Intersecting {len(pairs)} edge pairs.")
    return [pair_intersections(drawing, e, f) for e, f in pairs]


def analyze_system(rs: RotationSystem, convention: Convention) -> SystemAnalysis:
    """Genus, face count, all-b face check and canonical code of one rotation system.
    """
    walks = faces_of_rotation(rs).walks
    b_vertices = {v for v in rs.vertices if v.part == Part.B}
    all_b = any(
        b_vertices <= {dart[0] for dart in walk}
        for walk in walks
    )
    return SystemAnalysis(
        genus=genus_of(rs),
        faces=len(walks),
        all_b_face=all_b,
        class_id=canonical_code(rs, convention)
    )


def analyze_systems_chunk(
    systems: Sequence[RotationSystem],
    convention: Convention
) -> List[SystemAnalysis]:
    logger.debug(f"Analyzing {len(systems)} rotation systems under {convention.name}.")
    return [analyze_system(rs, convention) for rs in systems]
