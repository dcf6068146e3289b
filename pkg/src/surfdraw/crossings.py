"""Crossing counts, the star-crossing matrix and the forbidden pattern.
"""
from itertools import combinations
from typing import Dict, List, NamedTuple, Optional, Tuple
from typing_extensions import Annotated

from loguru import logger
from pydantic import BaseModel, ConfigDict, Field

from surfdraw import exceptions
from surfdraw.compute.compute_backend import ComputeBackend
from surfdraw.crossing_matrix import CrossingMatrix
from surfdraw.drawing import Drawing
from surfdraw.geometry import Point
from surfdraw.surface_kind import SurfaceKind
from surfdraw.validation import analyze_drawing, require_valid
from surfdraw.validation_issue import ValidationIssue
from surfdraw.vertex_id import VertexId

DIAGONAL_CONVENTION = "crossing pairs within one star"

# Star-crossing pattern that no drawing was supposed to realize:
# rows 1-2 are zero, rows 3-5 cross each other once.
FORBIDDEN_PATTERN = (
    (0, 0, 0, 0, 0),
    (0, 0, 0, 0, 0),
    (0, 0, 0, 1, 1),
    (0, 0, 1, 0, 1),
    (0, 0, 1, 1, 0),
)


class EdgeCrossings(NamedTuple):
    count: int
    points: List[Point]


class Crossing(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    edge_a: int
    edge_b: int
    point: Point


class PatternMatch(BaseModel):
    """Vertices playing the roles of the forbidden pattern.
    """
    model_config = ConfigDict(frozen=True)

    pair: Annotated[Tuple[VertexId, VertexId], Field(description="Vertices whose stars cross nothing in the pattern.")]
    triple: Annotated[Tuple[VertexId, VertexId, VertexId], Field(description="Vertices whose stars cross pairwise once.")]


    def render(self) -> str:
        return (
            f"pair {{{', '.join(v.name for v in self.pair)}}} "
            f"triple {{{', '.join(v.name for v in self.triple)}}}"
        )


class CertificateReport(BaseModel):
    """Outcome of certifying a drawing as a counterexample.
    """
    verdict: bool
    reasons: List[str]
    surface: SurfaceKind
    a_size: int
    b_size: int
    matrix: Optional[CrossingMatrix] = None
    matches: List[PatternMatch] = []
    inventory: List[Tuple[str, str, int]] = []
    errors: List[ValidationIssue] = []
    warnings: List[ValidationIssue] = []


def crossing_inventory(d: Drawing, compute: Optional[ComputeBackend] = None) -> List[Crossing]:
    """Every crossing of a valid drawing, sorted by edge pair, then point.
    """
    return [
        Crossing(edge_a=c.edge_a, edge_b=c.edge_b, point=c.point)
        for c in require_valid(d, compute=compute).crossings
    ]


def edge_crossings(
    d: Drawing,
    e: int,
    f: int,
    compute: Optional[ComputeBackend] = None
) -> EdgeCrossings:
    """Crossings between edges ``e`` and ``f`` on the surface.

    Meeting at a common vertex is not a crossing.

    Raises
    ------
    surfdraw.exceptions.InputVerificationError
        ``e == f`` or an index is out of range.
    surfdraw.exceptions.InvalidDrawingError
        The drawing failed validation.
    """
    n = len(d.edges)
    if e == f or not (0 <= e < n and 0 <= f < n):
        raise exceptions.InputVerificationError(f"need two distinct edge indices below {n}, got {e} and {f}")

    lo, hi = min(e, f), max(e, f)
    points = sorted(c.point for c in crossing_inventory(d, compute=compute) if (c.edge_a, c.edge_b) == (lo, hi))
    return EdgeCrossings(len(points), points)


def _star_matrix(d: Drawing, crossings: List[Crossing]) -> CrossingMatrix:
    labels = d.a_vertices
    row = {v: i for i, v in enumerate(labels)}
    entries = [[0] * len(labels) for _ in labels]
    for c in crossings:
        i = row[d.edges[c.edge_a].u]
        j = row[d.edges[c.edge_b].u]
        if i == j:
            entries[i][i] += 1
        else:
            entries[i][j] += 1
            entries[j][i] += 1

    return CrossingMatrix(labels=labels, entries=entries)


def star_crossing_matrix(d: Drawing, compute: Optional[ComputeBackend] = None) -> CrossingMatrix:
    """Star-crossing matrix over part ``A``, rows in index order.

    Off the diagonal, entry ``(i, j)`` sums the crossings of every edge at ``a_i`` with
    every edge at ``a_j``. The diagonal counts crossing pairs inside the star of ``a_i``.

    Raises
    ------
    surfdraw.exceptions.InvalidDrawingError
        The drawing failed validation.
    """
    return _star_matrix(d, crossing_inventory(d, compute=compute))


def find_forbidden_pattern(m: CrossingMatrix) -> List[PatternMatch]:
    """Every placement of the forbidden pattern in ``m``.

    A match is a pair and a disjoint triple such that, on their five rows and columns,
    each entry touching the pair is 0, entries between distinct triple members are 1
    and the diagonal is 0. Matches are unordered and sorted by index.
    Matrices smaller than 5 have no match.
    """
    n = m.size
    if n < 5:
        logger.info(f"Matrix of size {n} is too small for the forbidden pattern.")
        return []

    x = m.entries
    matches = []
    for pair in combinations(range(n), 2):
        if any(x[i][j] != 0 for i in pair for j in pair):
            continue

        rest = [k for k in range(n) if k not in pair]
        for triple in combinations(rest, 3):
            if any(x[i][j] != 0 for i in pair for j in triple):
                continue

            if any(x[i][i] != 0 for i in triple):
                continue

            if any(x[i][j] != 1 for i, j in combinations(triple, 2)):
                continue

            matches.append(
                PatternMatch(
                    pair=tuple(m.labels[i] for i in pair),
                    triple=tuple(m.labels[i] for i in triple)
                )
            )

    return matches


def certify_counterexample(d: Drawing, compute: Optional[ComputeBackend] = None) -> CertificateReport:
    """Check that a drawing of ``K_{m,4}`` on the Klein bottle realizes the forbidden pattern.

    Never raises on a bad drawing; every failure becomes a reason and a false verdict.
    """
    reasons = []
    if d.surface.kind != SurfaceKind.KLEIN:
        reasons.append("wrong-surface")

    if not d.is_complete_bipartite():
        reasons.append("not-complete-bipartite")

    if len(d.b_vertices) != 4:
        reasons.append("wrong-b-part-size")

    analysis = analyze_drawing(d, compute=compute)
    matrix = None
    matches = []
    inventory = []
    if not analysis.report.valid:
        reasons.append("invalid-drawing")
    else:
        crossings = [Crossing(edge_a=c.edge_a, edge_b=c.edge_b, point=c.point) for c in analysis.crossings]
        matrix = _star_matrix(d, crossings)
        matches = find_forbidden_pattern(matrix)
        if matrix.size < 5:
            reasons.append("matrix-too-small")
        elif len(matches) == 0:
            reasons.append("pattern-absent")

        counts: Dict[Tuple[int, int], int] = {}
        for c in crossings:
            counts[(c.edge_a, c.edge_b)] = counts.get((c.edge_a, c.edge_b), 0) + 1

        inventory = [(d.edges[a].name, d.edges[b].name, n) for (a, b), n in sorted(counts.items())]

    logger.debug(f"Certificate reasons: {reasons}.")
    return CertificateReport(
        verdict=len(reasons) == 0,
        reasons=reasons,
        surface=d.surface.kind,
        a_size=len(d.a_vertices),
        b_size=len(d.b_vertices),
        matrix=matrix,
        matches=matches,
        inventory=inventory,
        errors=analysis.report.errors,
        warnings=analysis.report.warnings
    )


def render_certificate(report: CertificateReport) -> str:
    lines = [
        f"verdict: {'true' if report.verdict else 'false'}",
        f"reasons: {' '.join(report.reasons) if len(report.reasons) > 0 else 'none'}",
        f"surface: {report.surface.value}",
        f"graph: K_{{{report.a_size},{report.b_size}}}",
    ]
    if report.matrix is not None:
        lines.append(f"diagonal: {DIAGONAL_CONVENTION}")
        lines.append("matrix:")
        lines.extend("  " + line for line in report.matrix.render().splitlines())
        lines.append(f"matches: {len(report.matches)}")
        lines.extend("  " + match.render() for match in report.matches)
        lines.append(f"crossings: {sum(n for _, _, n in report.inventory)}")
        lines.extend(f"  {a} x {b}: {n}" for a, b, n in report.inventory)

    lines.extend(issue.render("error") for issue in report.errors)
    if len(report.warnings) == 0:
        lines.append("warnings: none")
    else:
        lines.append(f"warnings: {len(report.warnings)}")
        lines.extend(issue.render("warning") for issue in report.warnings)

    return "\n".join(lines) + "\n"
