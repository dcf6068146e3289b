"""Faces of a drawing on its surface.

The rectangle frame is overlaid on the drawing, the resulting plane graph is cut into
cells, and cells are glued back across identified frame pieces into surface faces.
"""
from collections import defaultdict
from fractions import Fraction
from typing import Dict, List, NamedTuple, Optional, Set, Tuple
from typing_extensions import Annotated

import networkx as nx
from loguru import logger
from networkx.utils import UnionFind
from pydantic import BaseModel, ConfigDict, Field

from surfdraw.arrangement import Arrangement, build_arrangement
from surfdraw.checks import CrossingRecord
from surfdraw.compute.compute_backend import ComputeBackend
from surfdraw.drawing import Drawing
from surfdraw.geometry import Point, direction_key, point_in_polygon, signed_area
from surfdraw.part import Part
from surfdraw.side import Side
from surfdraw.validation import require_valid
from surfdraw.vertex_id import VertexId


class Traversal(NamedTuple):
    """One pass along an arrangement segment.

    ``orientation`` is the local orientation at the node being left, relative to
    its canonical chart; the face lies on the left when it is ``1``.
    """
    segment: int
    forward: bool
    orientation: int


class FaceWalk(BaseModel):
    traversals: Annotated[List[Traversal], Field(description="Segment passes in walk order.")]
    nodes: Annotated[List[int], Field(description="Node left by each traversal.")]


class Face(BaseModel):
    """A face of the drawing on the surface.
    """
    model_config = ConfigDict(frozen=True)

    id: int
    disk: Annotated[bool, Field(description="The face is an open disk.")]
    euler_characteristic: Annotated[int, Field(description="Euler characteristic of the open face.")]
    cells: Annotated[int, Field(description="Number of rectangle cells glued into the face.")]
    walks: Annotated[List[FaceWalk], Field(description="Boundary walks.")]
    vertices: Annotated[List[VertexId], Field(description="Vertices on the closure boundary.")]
    edges: Annotated[List[int], Field(description="Original edges on the boundary.")]


class FaceSet(BaseModel):
    faces: List[Face]
    arrangement: Arrangement


    @property
    def walk_length_total(self) -> int:
        return sum(len(w.traversals) for face in self.faces for w in face.walks)


class EulerReport(NamedTuple):
    vertices: int
    edges: int
    faces: int
    chi: int
    cellular: bool


def surface_walks(arr: Arrangement) -> List[List[Traversal]]:
    """Trace boundary walks of the arrangement, honoring orientation reversing segments.

    Each side of each segment is passed exactly once.
    """
    visited: Set[Tuple[int, int, int]] = set()
    walks = []
    for seg in arr.segments:
        for start in ((seg.id, 0, 1), (seg.id, 0, -1)):
            if start in visited:
                continue

            walk = []
            state = start
            while state not in visited:
                s, k, lam = state
                sig = arr.segments[s].signature
                visited.add(state)
                visited.add((s, 1 - k, -lam * sig))
                walk.append(Traversal(s, k == 0, lam))
                arrival = (s, 1 - k)
                lam = lam * sig
                ring = arr.rotations[arr.segments[s].node(1 - k)]
                i = ring.index(arrival)
                s, k = ring[(i - 1) % len(ring)] if lam == 1 else ring[(i + 1) % len(ring)]
                state = (s, k, lam)

            walks.append(walk)

    return walks


class _PlaneGraph:
    """The drawing overlaid with the frame, in rectangle coordinates.

    Dart ``2 * e`` runs from the tail to the head of plane edge ``e``, dart ``2 * e + 1`` back.
    """

    def __init__(self):
        self.points: List[Point] = []
        self.index: Dict[Point, int] = {}
        self.tails: List[int] = []
        self.heads: List[int] = []
        self.segment_of: List[Optional[int]] = []
        self.frame_key: Dict[Tuple[Side, Fraction, Fraction], int] = {}


    def node(self, p: Point) -> int:
        if p not in self.index:
            self.index[p] = len(self.points)
            self.points.append(p)

        return self.index[p]


    def add_edge(self, p: Point, q: Point, segment: Optional[int]) -> int:
        self.tails.append(self.node(p))
        self.heads.append(self.node(q))
        self.segment_of.append(segment)
        return len(self.tails) - 1


    def tail(self, dart: int) -> int:
        return self.tails[dart // 2] if dart % 2 == 0 else self.heads[dart // 2]


    def head(self, dart: int) -> int:
        return self.heads[dart // 2] if dart % 2 == 0 else self.tails[dart // 2]


    def trace(self) -> List[List[int]]:
        out: Dict[int, List[int]] = defaultdict(list)
        for dart in range(2 * len(self.tails)):
            out[self.tail(dart)].append(dart)

        position = {}
        for node, darts in out.items():
            darts.sort(key=lambda d: direction_key(self._vector(d)))
            for i, d in enumerate(darts):
                position[d] = i

        used = set()
        walks = []
        for start in range(2 * len(self.tails)):
            if start in used:
                continue

            walk = []
            dart = start
            while dart not in used:
                used.add(dart)
                walk.append(dart)
                ring = out[self.head(dart)]
                dart = ring[(position[dart ^ 1] - 1) % len(ring)]

            walks.append(walk)

        return walks


    def _vector(self, dart: int) -> Point:
        p = self.points[self.tail(dart)]
        q = self.points[self.head(dart)]
        return (q[0] - p[0], q[1] - p[1])


    def polygon(self, walk: List[int]) -> List[Point]:
        return [self.points[self.tail(d)] for d in walk]


def _overlay(d: Drawing, arr: Arrangement) -> _PlaneGraph:
    surface = d.surface
    w = surface.width
    h = surface.height
    plane = _PlaneGraph()
    for seg in arr.segments:
        for p, q in seg.pieces:
            plane.add_edge(p, q, seg.id)

    for p in ((0, 0), (w, 0), (0, h), (w, h)):
        plane.node((Fraction(p[0]), Fraction(p[1])))

    for vp in d.vertices.values():
        for rep in surface.representatives(vp):
            if surface.on_boundary(rep):
                plane.node(rep)

    on_side: Dict[Side, List[Fraction]] = defaultdict(list)
    for p in list(plane.points):
        for side in surface.sides_of(p):
            on_side[side].append(p[1] if side.is_vertical else p[0])

    for side, values in sorted(on_side.items(), key=lambda item: item[0].value):
        values = sorted(set(values))
        for lo, hi in zip(values, values[1:]):
            if side == Side.LEFT:
                e = plane.add_edge((Fraction(0), lo), (Fraction(0), hi), None)
            elif side == Side.RIGHT:
                e = plane.add_edge((w, lo), (w, hi), None)
            elif side == Side.BOTTOM:
                e = plane.add_edge((lo, Fraction(0)), (hi, Fraction(0)), None)
            else:
                e = plane.add_edge((lo, h), (hi, h), None)

            plane.frame_key[(side, lo, hi)] = e

    return plane


def _inner_dart(side: Side, edge: int) -> int:
    # Frame edges run toward larger coordinates; the rectangle is left of the dart returned.
    if side in (Side.BOTTOM, Side.RIGHT):
        return 2 * edge

    return 2 * edge + 1


def face_set(d: Drawing, compute: Optional[ComputeBackend] = None) -> FaceSet:
    """Faces of a valid drawing.

    Faces are sorted by their smallest boundary segment id.

    Raises
    ------
    surfdraw.exceptions.InvalidDrawingError
        The drawing failed validation.
    """
    return faces_from_crossings(d, require_valid(d, compute=compute).crossings)


def faces_from_crossings(d: Drawing, crossings: List[CrossingRecord]) -> FaceSet:
    """Faces of a drawing that already passed validation, given its crossings.

    Callers holding a ``DrawingAnalysis`` pass its ``crossings`` and skip a second validation.
    """
    return _faces(d, build_arrangement(d, crossings))


def _faces(d: Drawing, arr: Arrangement) -> FaceSet:
    surface = d.surface
    plane = _overlay(d, arr)
    plane_walks = plane.trace()
    graph = nx.Graph()
    graph.add_nodes_from(range(len(plane.points)))
    graph.add_edges_from(zip(plane.tails, plane.heads))
    component_of = {}
    for c, nodes in enumerate(sorted(nx.connected_components(graph), key=min)):
        for n in nodes:
            component_of[n] = c

    frame = component_of[plane.index[(Fraction(0), Fraction(0))]]
    cells: List[List[int]] = []
    areas: List[Fraction] = []
    outer: Dict[int, List[int]] = {}
    for walk in plane_walks:
        area = signed_area(plane.polygon(walk))
        if area > 0:
            cells.append(walk)
            areas.append(area)
        elif component_of[plane.tail(walk[0])] != frame:
            outer[component_of[plane.tail(walk[0])]] = walk

    cell_component = [component_of[plane.tail(walk[0])] for walk in cells]
    polygons = [plane.polygon(walk) for walk in cells]
    dart_cell: Dict[int, int] = {}
    for c, walk in enumerate(cells):
        for dart in walk:
            dart_cell[dart] = c

    holes: Dict[int, List[int]] = defaultdict(list)
    for comp in sorted(set(component_of.values()) - {frame}):
        members = [n for n, c in component_of.items() if c == comp]
        probe = min(plane.points[n] for n in members)
        container = min(
            (
                c for c in range(len(cells))
                if cell_component[c] != comp and point_in_polygon(probe, polygons[c])
            ),
            key=lambda c: (areas[c], c)
        )
        holes[container].append(comp)
        for dart in outer.get(comp, []):
            dart_cell[dart] = container

    uf = UnionFind(range(len(cells)))
    pair_cells = []
    for (side, lo, hi), e in sorted(plane.frame_key.items(), key=lambda item: (item[0][0].value, item[0][1])):
        if side == Side.LEFT:
            partner = (Side.RIGHT, surface.height - hi, surface.height - lo) if surface.is_klein else (Side.RIGHT, lo, hi)
        elif side == Side.BOTTOM:
            partner = (Side.TOP, lo, hi)
        else:
            continue

        a = dart_cell[_inner_dart(side, e)]
        b = dart_cell[_inner_dart(partner[0], plane.frame_key[partner])]
        uf.union(a, b)
        pair_cells.append(a)

    vertex_at = {p: v for v, p in d.vertices.items()}
    groups: Dict[int, List[int]] = defaultdict(list)
    for c in range(len(cells)):
        groups[uf[c]].append(c)

    euler: Dict[int, int] = {root: sum(1 - len(holes[c]) for c in members) for root, members in groups.items()}
    for c in pair_cells:
        euler[uf[c]] -= 1

    corner = (Fraction(0), Fraction(0))
    if corner not in vertex_at:
        e = plane.frame_key[min(k for k in plane.frame_key if k[0] == Side.BOTTOM)]
        euler[uf[dart_cell[_inner_dart(Side.BOTTOM, e)]]] += 1

    walks_of: Dict[int, List[List[Traversal]]] = defaultdict(list)
    for walk in surface_walks(arr):
        first = walk[0]
        seg = arr.segments[first.segment]
        p, q = seg.pieces[0] if first.forward else (seg.pieces[-1][1], seg.pieces[-1][0])
        dart = _dart_between(plane, p, q)
        local = first.orientation * (-1 if surface.chart_flip(p) else 1)
        cell = dart_cell[dart] if local == 1 else dart_cell[dart ^ 1]
        walks_of[uf[cell]].append(walk)

    faces = []
    for root, members in groups.items():
        vertices: Set[VertexId] = set()
        edges: Set[int] = set()
        boundary = [cells[c] for c in members]
        for c in members:
            for comp in holes[c]:
                if comp in outer:
                    boundary.append(outer[comp])
                    continue

                # isolated vertex
                for n, k in component_of.items():
                    if k == comp and surface.identify(plane.points[n]) in vertex_at:
                        vertices.add(vertex_at[surface.identify(plane.points[n])])

        for walk in boundary:
            for dart in walk:
                canonical = surface.identify(plane.points[plane.tail(dart)])
                if canonical in vertex_at:
                    vertices.add(vertex_at[canonical])

                segment = plane.segment_of[dart // 2]
                if segment is not None:
                    edges.add(arr.segments[segment].edge)

        walks = sorted(walks_of[root], key=lambda w: min(t.segment for t in w))
        chi = euler[root]
        faces.append(
            (
                min((t.segment for w in walks for t in w), default=len(arr.segments)),
                min(members),
                chi,
                len(members),
                walks,
                sorted(vertices),
                sorted(edges)
            )
        )

    faces.sort(key=lambda f: (f[0], f[1]))
    result = [
        Face(
            id=i,
            disk=chi == 1 and len(walks) == 1,
            euler_characteristic=chi,
            cells=n_cells,
            walks=[
                FaceWalk(traversals=w, nodes=[arr.segments[t.segment].node(0 if t.forward else 1) for t in w])
                for w in walks
            ],
            vertices=vertices,
            edges=edges
        )
        for i, (_, _, chi, n_cells, walks, vertices, edges) in enumerate(faces)
    ]
    logger.debug(f"Glued {len(cells)} cells into {len(result)} faces.")
    return FaceSet(faces=result, arrangement=arr)


def _dart_between(plane: _PlaneGraph, p: Point, q: Point) -> int:
    a = plane.index[p]
    b = plane.index[q]
    for e in range(len(plane.tails)):
        if plane.tails[e] == a and plane.heads[e] == b:
            return 2 * e

        if plane.tails[e] == b and plane.heads[e] == a:
            return 2 * e + 1

    raise KeyError((p, q))


def euler_report(d: Drawing, compute: Optional[ComputeBackend] = None) -> EulerReport:
    """``(V, E, F, chi, cellular)`` of a valid drawing.

    ``V`` counts vertices and crossings, ``E`` arrangement segments.
    """
    faces = face_set(d, compute=compute)
    return _euler(faces)


def _euler(faces: FaceSet) -> EulerReport:
    v = len(faces.arrangement.nodes)
    e = len(faces.arrangement.segments)
    f = len(faces.faces)
    return EulerReport(v, e, f, v - e + f, all(face.disk for face in faces.faces))


def all_b_faces(d: Drawing, compute: Optional[ComputeBackend] = None) -> List[int]:
    """Ids of faces whose closure boundary holds every vertex of part ``B``.
    """
    return all_b_face_ids(d, face_set(d, compute=compute))


def all_b_face_ids(d: Drawing, faces: FaceSet) -> List[int]:
    """Ids of the faces in ``faces`` whose closure boundary holds every vertex of part ``B``.

    An empty part ``B`` gives no ids.
    """
    b_vertices = set(d.part(Part.B))
    if len(b_vertices) == 0:
        return []

    return [face.id for face in faces.faces if b_vertices <= set(face.vertices)]


def render_face_report(d: Drawing, faces: FaceSet) -> str:
    arr = faces.arrangement
    lines = [f"faces: {len(faces.faces)}"]
    for face in faces.faces:
        lines.append(f"face {face.id} disk: {'true' if face.disk else 'false'} chi: {face.euler_characteristic}")
        for walk in face.walks:
            lines.append("  walk: " + " ".join(arr.nodes[n].label for n in walk.nodes))

        b_names = [v.name for v in face.vertices if v.part == Part.B]
        lines.append(f"  b-vertices: {' '.join(b_names) if len(b_names) > 0 else '-'}")

    report = _euler(faces)
    lines.append(
        f"euler: V={report.vertices} E={report.edges} F={report.faces} chi={report.chi} "
        f"cellular={'true' if report.cellular else 'false'}"
    )
    all_b = all_b_face_ids(d, faces)
    lines.append(f"all-b faces: {' '.join(str(i) for i in all_b) if len(all_b) > 0 else 'none'}")
    return "\n".join(lines) + "\n"
