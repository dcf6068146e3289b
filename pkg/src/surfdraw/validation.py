from collections import defaultdict
from typing import Dict, List, NamedTuple, Optional, Set, Tuple
from typing_extensions import Annotated

from loguru import logger
from pydantic import BaseModel, Field

from surfdraw import exceptions
from surfdraw.checks import STRUCTURAL_CODES, CrossingRecord, edge_issues
from surfdraw.compute.compute_backend import ComputeBackend
from surfdraw.compute.main_process_compute import MainProcessCompute
from surfdraw.drawing import Drawing
from surfdraw.geometry import Point
from surfdraw.part import Part
from surfdraw.validation_issue import ValidationIssue


class ValidationReport(BaseModel):
    """Outcome of validating a drawing.

    Errors and warnings are sorted by edge, arc and segment index.
    """
    errors: Annotated[List[ValidationIssue], Field(description="Violations of the drawing invariants.")]
    warnings: Annotated[List[ValidationIssue], Field(description="Facts worth auditing that do not invalidate the drawing.")]
    crossings: Annotated[int, Field(description="Number of crossing points found.")]


    @property
    def valid(self) -> bool:
        return len(self.errors) == 0


    def codes(self) -> Set[str]:
        return {issue.code for issue in self.errors}


class DrawingAnalysis(NamedTuple):
    report: ValidationReport
    crossings: List[CrossingRecord]


def _edge_pairs(d: Drawing) -> List[Tuple[int, int]]:
    n = len(d.edges)
    return [(e, f) for e in range(n) for f in range(e, n)]


def analyze_drawing(d: Drawing, compute: Optional[ComputeBackend] = None) -> DrawingAnalysis:
    """Validate a drawing and collect its crossings in one pass.

    Parameters
    ----------
    d : Drawing
        The drawing.
    compute : Optional[ComputeBackend]
        Backend for the edge pair checks. Defaults to ``MainProcessCompute``.

    Returns
    -------
    DrawingAnalysis
        Validation report and crossing records sorted by edge pair, then point.
    """
    if compute is None:
        compute = MainProcessCompute()

    errors: List[ValidationIssue] = []
    warnings: List[ValidationIssue] = []
    errors.extend(_global_issues(d))
    for e in range(len(d.edges)):
        errors.extend(edge_issues(d, e))

    crossings: List[CrossingRecord] = []
    if len({issue.code for issue in errors} & STRUCTURAL_CODES) == 0:
        for result in compute.edge_pair_intersections(d, _edge_pairs(d)):
            errors.extend(result.issues)
            crossings.extend(result.crossings)

        crossings.sort(key=lambda c: (c.edge_a, c.edge_b, c.point))
        errors.extend(_transit_issues(d))
        errors.extend(_triple_points(crossings))
        for c in crossings:
            if d.edges[c.edge_a].shares_endpoint(d.edges[c.edge_b]):
                warnings.append(
                    ValidationIssue(
                        code="adjacent-crossing",
                        message=f"crosses adjacent edge {c.edge_b} ({d.edges[c.edge_b].name}) at {c.point[0]},{c.point[1]}",
                        edge=c.edge_a,
                        arc=c.arc_a,
                        segment=c.seg_a
                    )
                )

    errors.sort(key=lambda issue: issue.sort_key)
    warnings.sort(key=lambda issue: issue.sort_key)
    logger.debug(f"Validated drawing: {len(errors)} errors, {len(warnings)} warnings, {len(crossings)} crossings.")
    return DrawingAnalysis(
        report=ValidationReport(errors=errors, warnings=warnings, crossings=len(crossings)),
        crossings=crossings
    )


def validate(d: Drawing, compute: Optional[ComputeBackend] = None) -> ValidationReport:
    """Check every drawing invariant.

    Errors are returned, never raised.
    Crossings between edges with a common endpoint are warnings.

    Examples
    --------
    .. code-block:: python

        from surfdraw import load_drawing, validate

        report = validate(load_drawing("fixtures/k45_klein_counterexample.tgd"))
        print(report.valid, report.crossings) # True 3
    """
    return analyze_drawing(d, compute=compute).report


def require_valid(d: Drawing, compute: Optional[ComputeBackend] = None) -> DrawingAnalysis:
    """Like ``analyze_drawing`` but raise when the drawing has errors.

    Raises
    ------
    surfdraw.exceptions.InvalidDrawingError
        The drawing failed validation.
    """
    analysis = analyze_drawing(d, compute=compute)
    if not analysis.report.valid:
        raise exceptions.InvalidDrawingError(
            analysis.report,
            f"The drawing is not valid: {', '.join(sorted(analysis.report.codes()))}"
        )

    return analysis


def _global_issues(d: Drawing) -> List[ValidationIssue]:
    issues = []
    points: Dict[Point, str] = {}
    for v, p in d.vertices.items():
        if p in points:
            issues.append(ValidationIssue(code="duplicate-vertex-point", message=f"{v.name} shares its point with {points[p]}"))
        else:
            points[p] = v.name

    pairs = set()
    for i, e in enumerate(d.edges):
        if e.u.part != Part.A or e.v.part != Part.B:
            issues.append(ValidationIssue(code="bad-endpoints", message="edges run from part A to part B", edge=i))

        if (e.u, e.v) in pairs:
            issues.append(ValidationIssue(code="duplicate-edge", message=f"second edge between {e.u.name} and {e.v.name}", edge=i))

        pairs.add((e.u, e.v))

    return issues


def _transit_issues(d: Drawing) -> List[ValidationIssue]:
    """Distinct transits that are the same surface point.
    """
    owners: Dict[Point, List[Tuple[int, int]]] = defaultdict(list)
    for i, e in enumerate(d.edges):
        for a in range(len(e.arcs) - 1):
            owners[d.surface.identify(e.arcs[a][-1])].append((i, a))

    issues = []
    for p, transits in sorted(owners.items()):
        for (i, a), (j, b) in zip(transits, transits[1:]):
            code = "self-intersection" if i == j else "boundary-crossing"
            issues.append(
                ValidationIssue(
                    code=code,
                    message=f"transit at {p[0]},{p[1]} is shared with edge {i} arc {a}",
                    edge=j,
                    arc=b,
                    segment=len(d.edges[j].arcs[b]) - 2
                )
            )

    return issues


def _triple_points(crossings: List[CrossingRecord]) -> List[ValidationIssue]:
    edges_at: Dict[Point, Set[int]] = defaultdict(set)
    for c in crossings:
        edges_at[c.point].update((c.edge_a, c.edge_b))

    issues = []
    for p, edges in sorted(edges_at.items()):
        if len(edges) >= 3:
            issues.append(
                ValidationIssue(
                    code="triple-point",
                    message=f"edges {sorted(edges)} meet at {p[0]},{p[1]}",
                    edge=min(edges)
                )
            )

    return issues


def render_validation_report(report: ValidationReport) -> str:
    lines = [
        f"valid: {'true' if report.valid else 'false'}",
        f"errors: {len(report.errors)}",
        f"warnings: {len(report.warnings)}",
        f"crossings: {report.crossings}",
    ]
    lines.extend(issue.render("error") for issue in report.errors)
    lines.extend(issue.render("warning") for issue in report.warnings)
    return "\n".join(lines) + "\n"
