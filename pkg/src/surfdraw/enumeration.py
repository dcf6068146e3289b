"""Exhaustive classification of crossing-free K_{2,4} drawings on the torus.

Cellular embeddings are exactly the genus-1 rotation systems, and only those are
enumerated. A non-cellular drawing reads as a genus-0 system whose face walks each
see two b-vertices, yet its annulus face joins two walks and may see all four;
``fixture_audit`` reports such drawings as not enumerated.
"""
from collections import defaultdict
from itertools import permutations
from typing import Dict, List, Optional, Tuple
from typing_extensions import Annotated

from loguru import logger
from pydantic import BaseModel, Field

from surfdraw import exceptions
from surfdraw.canonical import canonical_code
from surfdraw.class_id import ClassId
from surfdraw.compute.compute_backend import ComputeBackend
from surfdraw.compute.main_process_compute import MainProcessCompute
from surfdraw.convention import Convention
from surfdraw.drawing import Drawing
from surfdraw.embedding import rotation_system_of
from surfdraw.orientation import Orientation
from surfdraw.part import Part
from surfdraw.rotation_system import RotationSystem, faces_of_rotation, genus_of, reflect
from surfdraw.surface_kind import SurfaceKind
from surfdraw.vertex_id import VertexId

A_VERTICES = [VertexId(part=Part.A, index=i) for i in (1, 2)]
B_VERTICES = [VertexId(part=Part.B, index=i) for i in (1, 2, 3, 4)]


class EmbeddingClass(BaseModel):
    class_id: Annotated[ClassId, Field(description="Canonical code of the class.")]
    multiplicity: Annotated[int, Field(description="Rotation systems of the sample space in the class.")]
    representative: Annotated[RotationSystem, Field(description="First rotation system found in the class.")]


class EnumerationResult(BaseModel):
    """Tally of the K_{2,4} torus enumeration.

    Multiplicities sum to ``passing_filter``.
    """
    convention: Convention
    examined: Annotated[int, Field(description="Rotation systems examined.")]
    genus1_cellular: Annotated[int, Field(description="Systems of genus 1.")]
    passing_filter: Annotated[int, Field(description="Genus-1 systems with a face seeing every b-vertex.")]
    classes: Annotated[List[EmbeddingClass], Field(description="Classes sorted by code.")]
    chiral_pairs: Annotated[int, Field(description="Mirror pairs among the oriented classes of the survivors.")]


def _system(a1_order: Tuple[VertexId, ...], a2_order: Tuple[VertexId, ...]) -> RotationSystem:
    a1, a2 = A_VERTICES
    rotations = {a1: a1_order, a2: a2_order}
    for b in B_VERTICES:
        rotations[b] = (a1, a2)

    return RotationSystem(rotations=rotations)


def k24_rotation_systems() -> List[RotationSystem]:
    """The 36 rotation systems of K_{2,4} with ``b1`` first around ``a1`` and ``a2``.

    Degree-2 vertices have a single cyclic order.
    """
    b1 = B_VERTICES[0]
    orders = [(b1,) + rest for rest in permutations(B_VERTICES[1:])]
    return [_system(s1, s2) for s1 in orders for s2 in orders]


def k24_linear_orders() -> List[RotationSystem]:
    """All ``(4!)^2`` systems obtained by listing the orders at ``a1`` and ``a2`` from every start.
    """
    orders = list(permutations(B_VERTICES))
    return [_system(s1, s2) for s1 in orders for s2 in orders]


def _tally(
    systems: List[RotationSystem],
    convention: Convention,
    compute: ComputeBackend
) -> EnumerationResult:
    analyses = compute.analyze_rotation_systems(systems, convention)
    oriented = Convention(orientation=Orientation.ORIENTED, labels=convention.labels)
    oriented_analyses = analyses
    if convention != oriented:
        oriented_analyses = compute.analyze_rotation_systems(systems, oriented)

    members: Dict[str, List[int]] = defaultdict(list)
    genus1 = 0
    survivors = 0
    oriented_codes = set()
    for i, analysis in enumerate(analyses):
        if analysis.genus != 1:
            continue

        genus1 += 1
        if not analysis.all_b_face:
            continue

        survivors += 1
        members[analysis.class_id.code].append(i)
        oriented_codes.add(oriented_analyses[i].class_id)

    classes = [
        EmbeddingClass(
            class_id=analyses[indexes[0]].class_id,
            multiplicity=len(indexes),
            representative=systems[indexes[0]]
        )
        for _, indexes in sorted(members.items())
    ]
    chiral = sum(1 for c in oriented_codes if c.chiral)
    logger.debug(f"Enumerated {len(systems)} systems into {len(classes)} classes under {convention.name}.")
    return EnumerationResult(
        convention=convention,
        examined=len(systems),
        genus1_cellular=genus1,
        passing_filter=survivors,
        classes=classes,
        chiral_pairs=chiral // 2
    )


def enumerate_k24_torus(
    convention: Optional[Convention] = None,
    compute: Optional[ComputeBackend] = None
) -> EnumerationResult:
    """Classify every crossing-free drawing of K_{2,4} on the torus that has an all-b face.

    Parameters
    ----------
    convention : Optional[Convention]
        Isomorphism convention. Defaults to oriented with relabeling inside parts.
    compute : Optional[ComputeBackend]
        Backend for the per-system analysis. Defaults to ``MainProcessCompute``.

    Returns
    -------
    EnumerationResult
        Counts and classes sorted by canonical code.

    Examples
    --------
    .. code-block:: python

        from surfdraw import enumerate_k24_torus

        result = enumerate_k24_torus()
        print(result.examined, result.genus1_cellular, len(result.classes)) # 36 30 2
    """
    if convention is None:
        convention = Convention()

    if compute is None:
        compute = MainProcessCompute()

    return _tally(k24_rotation_systems(), convention, compute)


def enumerate_k24_torus_full(
    convention: Optional[Convention] = None,
    compute: Optional[ComputeBackend] = None
) -> EnumerationResult:
    """Same classification over all ``(4!)^2`` linear orders, without fixing ``b1`` first.
    """
    if convention is None:
        convention = Convention()

    if compute is None:
        compute = MainProcessCompute()

    return _tally(k24_linear_orders(), convention, compute)


def planar_face_b_counts() -> List[List[int]]:
    """Distinct b-vertices on every face of every genus-0 K_{2,4} system.
    """
    counts = []
    for rs in k24_rotation_systems():
        if genus_of(rs) != 0:
            continue

        counts.append([
            len({u for u, _ in walk if u.part == Part.B})
            for walk in faces_of_rotation(rs).walks
        ])

    return counts


def classify_drawing(
    d: Drawing,
    convention: Optional[Convention] = None,
    compute: Optional[ComputeBackend] = None
) -> ClassId:
    """Class of a crossing-free K_{2,4} drawing on the torus.

    Raises
    ------
    surfdraw.exceptions.GraphShapeError
        The drawing is not K_{2,4} on ``a1, a2, b1 .. b4``.
    surfdraw.exceptions.UnsupportedSurfaceError
        The drawing is on the Klein bottle.
    surfdraw.exceptions.NotEmbeddedError
        The drawing has crossings.
    """
    if convention is None:
        convention = Convention()

    if d.surface.kind != SurfaceKind.TORUS:
        raise exceptions.UnsupportedSurfaceError("classification needs a torus drawing")

    if d.a_vertices != A_VERTICES or d.b_vertices != B_VERTICES or not d.is_complete_bipartite():
        raise exceptions.GraphShapeError("classification needs K_{2,4} on a1, a2, b1, b2, b3, b4")

    return canonical_code(rotation_system_of(d, compute=compute), convention)


def mirror_code(rs: RotationSystem, convention: Convention) -> ClassId:
    """Code of the mirror image under the same convention.
    """
    return canonical_code(reflect(rs), convention)


def render_enumeration(result: EnumerationResult) -> str:
    lines = [
        f"convention: {result.convention.name}",
        f"examined: {result.examined}",
        f"genus1_cellular: {result.genus1_cellular}",
        f"passing_filter: {result.passing_filter}",
        f"classes: {len(result.classes)}",
        f"chiral_pairs: {result.chiral_pairs}",
    ]
    for c in result.classes:
        lines.append(
            f"class {c.class_id.digest} chiral={'true' if c.class_id.chiral else 'false'} "
            f"multiplicity={c.multiplicity} rotation={c.representative.literal()}"
        )

    return "\n".join(lines) + "\n"
