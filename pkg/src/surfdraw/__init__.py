

__version__ = "0.1.0a1"

__all__ = [
    "AuditCorpus",
    "AuditEntry",
    "AuditReport",
    "CertificateReport",
    "ClassId",
    "Convention",
    "CrossingMatrix",
    "DeckTransform",
    "Drawing",
    "EdgeCurve",
    "EnumerationResult",
    "EulerReport",
    "FaceSet",
    "LabelGroup",
    "Orientation",
    "Part",
    "RenderStyle",
    "RotationSystem",
    "Side",
    "SurfaceKind",
    "SurfaceSpec",
    "ValidationIssue",
    "ValidationReport",
    "VertexId",
    "all_b_face_ids",
    "all_b_faces",
    "canonical_code",
    "certify_counterexample",
    "classify_drawing",
    "cover_crossing_count",
    "crossing_inventory",
    "edge_crossings",
    "enumerate_k24_torus",
    "enumerate_k24_torus_full",
    "euler_report",
    "face_set",
    "faces_from_crossings",
    "faces_of_rotation",
    "find_forbidden_pattern",
    "fixture_audit",
    "genus_of",
    "load_drawing",
    "parse_drawing",
    "planar_face_b_counts",
    "render_svg",
    "rotation_system_of",
    "serialize_drawing",
    "star_crossing_matrix",
    "unroll_to_cover",
    "validate",
]

from surfdraw import logging_config
logging_config

from surfdraw.audit import AuditCorpus, AuditEntry, AuditReport, fixture_audit
from surfdraw.canonical import canonical_code
from surfdraw.class_id import ClassId
from surfdraw.convention import Convention
from surfdraw.cover import cover_crossing_count, unroll_to_cover
from surfdraw.crossing_matrix import CrossingMatrix
from surfdraw.crossings import (
    CertificateReport,
    certify_counterexample,
    crossing_inventory,
    edge_crossings,
    find_forbidden_pattern,
    star_crossing_matrix
)
from surfdraw.drawing import Drawing
from surfdraw.drawing_io import load_drawing, parse_drawing, serialize_drawing
from surfdraw.edge_curve import EdgeCurve
from surfdraw.embedding import rotation_system_of
from surfdraw.enumeration import (
    EnumerationResult,
    classify_drawing,
    enumerate_k24_torus,
    enumerate_k24_torus_full,
    planar_face_b_counts
)
from surfdraw.faces import (
    EulerReport,
    FaceSet,
    all_b_face_ids,
    all_b_faces,
    euler_report,
    face_set,
    faces_from_crossings
)
from surfdraw.label_group import LabelGroup
from surfdraw.orientation import Orientation
from surfdraw.part import Part
from surfdraw.render import render_svg
from surfdraw.render_style import RenderStyle
from surfdraw.rotation_system import RotationSystem, faces_of_rotation, genus_of
from surfdraw.side import Side
from surfdraw.surface import DeckTransform, SurfaceSpec
from surfdraw.surface_kind import SurfaceKind
from surfdraw.validation import ValidationReport, validate
from surfdraw.validation_issue import ValidationIssue
from surfdraw.vertex_id import VertexId

from surfdraw.compute import *

from surfdraw.compute import __all__ as compute_all

__all__ += compute_all
