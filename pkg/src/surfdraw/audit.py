"""Cross-check transcribed drawings against their published class labels.
"""
from collections import defaultdict
from itertools import combinations
from pathlib import Path
from typing import Dict, List, Optional, Union
from typing_extensions import Annotated

from loguru import logger
from pydantic import BaseModel, Field, ValidationError

from surfdraw import exceptions
from surfdraw.canonical import canonical_code
from surfdraw.class_id import ClassId
from surfdraw.compute.compute_backend import ComputeBackend
from surfdraw.compute.main_process_compute import MainProcessCompute
from surfdraw.convention import Convention
from surfdraw.drawing_io import load_drawing
from surfdraw.embedding import rotation_system_of
from surfdraw.enumeration import classify_drawing, enumerate_k24_torus
from surfdraw.faces import all_b_face_ids, faces_from_crossings
from surfdraw.orientation import Orientation
from surfdraw.rotation_system import reflect
from surfdraw.validation import analyze_drawing

NOT_INCLUDED = "Not included"
SYM_PREFIX = "sym "
MANIFEST = "corpus.json"


class AuditEntry(BaseModel):
    file: Annotated[str, Field(description="Drawing file, relative to the corpus directory.")]
    label: Annotated[
        str,
        Field(
            description="Class name, ``sym <name>`` for the mirror of a class, or ``Not included``.",
            min_length=1
        )
    ]


class AuditCorpus(BaseModel):
    """Manifest of an audit corpus directory, stored as ``corpus.json``.

    .. code-block:: json

        {"entries": [{"file": "k24_i_i.tgd", "label": "7(ii)"}]}
    """
    entries: Annotated[List[AuditEntry], Field(description="Fixtures with their labels.")]


    @classmethod
    def load(cls, corpus_dir: Union[str, Path]) -> "AuditCorpus":
        """Read the manifest of ``corpus_dir``.

        Raises
        ------
        surfdraw.exceptions.CorpusError
            The manifest is missing or malformed.
        """
        path = Path(corpus_dir) / MANIFEST
        try:
            return cls.model_validate_json(path.read_text())
        except OSError as exc:
            raise exceptions.CorpusError(f"cannot read {path}: {exc}") from exc
        except ValidationError as exc:
            raise exceptions.CorpusError(f"malformed manifest {path}: {exc}") from exc


class AuditOutcome(BaseModel):
    file: str
    label: str
    status: Annotated[str, Field(description="``classified``, ``filtered`` or ``rejected``.")]
    class_id: Optional[ClassId] = None


class AuditReport(BaseModel):
    convention: Convention
    outcomes: List[AuditOutcome]
    classified: int
    filtered: int
    mismatches: Annotated[List[str], Field(description="One line per disagreement with the labels.")]


def _base(label: str) -> str:
    if label.startswith(SYM_PREFIX):
        return label[len(SYM_PREFIX):]

    return label


def fixture_audit(
    corpus_dir: Union[str, Path],
    convention: Optional[Convention] = None,
    compute: Optional[ComputeBackend] = None
) -> AuditReport:
    """Classify every fixture of a corpus and compare the partition with its labels.

    Fixtures labeled ``Not included`` must have no all-b face.
    Other fixtures must pass the filter and classify into an enumerated class.
    Fixtures with the same label must share a class,
    fixtures with different labels must not,
    and ``sym X`` fixtures must be mirror images of ``X`` fixtures.
    Under an oriented convention a ``sym X`` fixture must not share the code of a chiral ``X``.

    Parameters
    ----------
    corpus_dir : Union[str, Path]
        Directory holding ``corpus.json`` and the drawing files.
    convention : Optional[Convention]
        Classification convention. Defaults to oriented with relabeling inside parts.
    compute : Optional[ComputeBackend]
        Defaults to ``MainProcessCompute``.

    Returns
    -------
    AuditReport
        Mismatches are reported, not raised.

    Raises
    ------
    surfdraw.exceptions.CorpusError
        The manifest is missing or malformed.
    """
    if convention is None:
        convention = Convention()

    if compute is None:
        compute = MainProcessCompute()

    corpus = AuditCorpus.load(corpus_dir)
    enumerated = {c.class_id.code for c in enumerate_k24_torus(convention, compute=compute).classes}
    outcomes: List[AuditOutcome] = []
    mismatches: List[str] = []
    mirrors: Dict[str, str] = {}
    for entry in corpus.entries:
        try:
            d = load_drawing(Path(corpus_dir) / entry.file)
        except (OSError, exceptions.SurfdrawError) as exc:
            raise exceptions.CorpusError(f"{entry.file}: {exc}") from exc

        def reject(reason: str) -> None:
            outcomes.append(AuditOutcome(file=entry.file, label=entry.label, status="rejected"))
            mismatches.append(f"{entry.file}: {reason}")

        analysis = analyze_drawing(d, compute=compute)
        if not analysis.report.valid:
            reject("invalid drawing " + ", ".join(sorted(analysis.report.codes())))
            continue

        if len(analysis.crossings) > 0:
            reject(f"{len(analysis.crossings)} crossings")
            continue

        all_b = all_b_face_ids(d, faces_from_crossings(d, analysis.crossings))
        if entry.label == NOT_INCLUDED:
            if len(all_b) > 0:
                reject("labeled Not included but has an all-b face")
            else:
                outcomes.append(AuditOutcome(file=entry.file, label=entry.label, status="filtered"))

            continue

        if len(all_b) == 0:
            reject(f"labeled {entry.label} but has no all-b face")
            continue

        try:
            class_id = classify_drawing(d, convention, compute=compute)
        except exceptions.SurfdrawError as exc:
            reject(str(exc))
            continue

        if class_id.code not in enumerated:
            mismatches.append(f"{entry.file}: class {class_id.digest} is not an enumerated class")

        mirrors[entry.file] = canonical_code(reflect(rotation_system_of(d, compute=compute)), convention).code
        outcomes.append(AuditOutcome(file=entry.file, label=entry.label, status="classified", class_id=class_id))

    classified = [o for o in outcomes if o.status == "classified"]
    mismatches.extend(_partition_mismatches(classified, mirrors, convention))
    filtered = sum(1 for o in outcomes if o.status == "filtered")
    logger.debug(f"Audited {len(outcomes)} fixtures with {len(mismatches)} mismatches.")
    return AuditReport(
        convention=convention,
        outcomes=outcomes,
        classified=len(classified),
        filtered=filtered,
        mismatches=mismatches
    )


def _partition_mismatches(
    classified: List[AuditOutcome],
    mirrors: Dict[str, str],
    convention: Convention
) -> List[str]:
    mismatches = []
    oriented = convention.orientation == Orientation.ORIENTED
    by_label: Dict[str, List[AuditOutcome]] = defaultdict(list)
    for o in classified:
        by_label[o.label].append(o)

    for x, y in combinations(classified, 2):
        same = x.class_id.code == y.class_id.code
        if x.label == y.label and not same:
            mismatches.append(f"{x.file} and {y.file}: same label {x.label} but different classes")
        elif _base(x.label) != _base(y.label) and same:
            mismatches.append(f"{x.file} and {y.file}: labels {x.label} and {y.label} share a class")

    for label, members in sorted(by_label.items()):
        if not label.startswith(SYM_PREFIX):
            continue

        for o in members:
            for base in by_label.get(_base(label), []):
                if oriented and base.class_id.chiral and o.class_id.code == base.class_id.code:
                    mismatches.append(f"{o.file} and {base.file}: labels {o.label} and {base.label} share a chiral class")
                elif mirrors[o.file] != base.class_id.code:
                    mismatches.append(f"{o.file} is not the mirror image of {base.file}")

    return mismatches


def render_audit(report: AuditReport) -> str:
    lines = [f"convention: {report.convention.name}"]
    for o in report.outcomes:
        line = f"{o.file} [{o.label}] {o.status}"
        if o.class_id is not None:
            line += f" class {o.class_id.digest}"

        lines.append(line)

    for m in report.mismatches:
        lines.append(f"mismatch: {m}")

    lines.append(
        f"{report.classified} classified, {report.filtered} filtered (no all-b face), "
        f"{len(report.mismatches)} mismatches"
    )
    return "\n".join(lines) + "\n"
