"""``surfdraw`` command line.

Exit codes: 0 success or affirmative verdict, 1 negative verdict or invalid drawing,
2 usage, I/O or parse failure.
"""
import argparse
from pathlib import Path
import sys
from typing import Callable, List, Optional

from loguru import logger

from surfdraw import __version__, exceptions
from surfdraw.audit import fixture_audit, render_audit
from surfdraw.compute.compute_backend import ComputeBackend
from surfdraw.compute.main_process_compute import MainProcessCompute
from surfdraw.compute.multiprocess_compute import MultiprocessCompute
from surfdraw.convention import Convention
from surfdraw.crossings import DIAGONAL_CONVENTION, certify_counterexample, render_certificate, star_crossing_matrix
from surfdraw.drawing import Drawing
from surfdraw.drawing_io import load_drawing
from surfdraw.enumeration import enumerate_k24_torus, render_enumeration
from surfdraw.faces import face_set, render_face_report
from surfdraw.label_group import LabelGroup
from surfdraw.orientation import Orientation
from surfdraw.render import render_svg
from surfdraw.render_style import RenderStyle
from surfdraw.validation import render_validation_report, validate

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")

    return value


def _positive_float(text: str) -> float:
    value = float(text)
    if not value > 0:
        raise argparse.ArgumentTypeError(f"expected a positive number, got {text}")

    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="surfdraw",
        description="Verify and enumerate drawings of bipartite graphs on the torus and the Klein bottle."
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument(
        "--workers",
        type=_positive_int,
        default=1,
        help="Worker processes. 1 runs in the main process."
    )
    parser.add_argument("--verbose", action="store_true", help="Log debug messages to stderr.")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, help_text in [
        ("validate", "Check a drawing file and list every problem."),
        ("matrix", "Print the star-crossing matrix of a drawing."),
        ("certify", "Certify a Klein bottle drawing as a counterexample."),
        ("faces", "List the faces of a drawing."),
    ]:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("path", type=Path)

    p = sub.add_parser("enumerate", help="Classify the crossing-free K_{2,4} torus drawings with an all-b face.")
    p.add_argument("--convention", choices=[o.value for o in Orientation], default=Orientation.ORIENTED.value)
    p.add_argument("--labels", choices=[g.value for g in LabelGroup], default=LabelGroup.PARTS.value)
    p.add_argument("--all-conventions", action="store_true", help="Run every convention in turn.")

    p = sub.add_parser("audit", help="Compare a labeled corpus of drawings with the enumeration.")
    p.add_argument("corpus", type=Path)
    p.add_argument("--convention", choices=[o.value for o in Orientation], default=Orientation.ORIENTED.value)
    p.add_argument("--labels", choices=[g.value for g in LabelGroup], default=LabelGroup.PARTS.value)

    p = sub.add_parser("render", help="Write an SVG picture of a drawing.")
    p.add_argument("path", type=Path)
    p.add_argument("-o", "--output", type=Path, required=True)
    p.add_argument("--scale", type=_positive_float, default=RenderStyle().scale)
    p.add_argument("--no-arrows", action="store_true", help="Leave out the gluing arrowheads.")
    p.add_argument("--crossing-marker", choices=["ring", "cross"], default=RenderStyle().crossing_marker)
    return parser


def _convention(args: argparse.Namespace) -> Convention:
    return Convention(orientation=Orientation(args.convention), labels=LabelGroup(args.labels))


def _print(text: str) -> None:
    sys.stdout.write(text)


def _error(text: str) -> None:
    sys.stderr.write(f"surfdraw: {text}\n")


def _with_drawing(args: argparse.Namespace, run: Callable[[Drawing], int]) -> int:
    try:
        d = load_drawing(args.path)
    except (OSError, exceptions.SurfdrawError) as exc:
        _error(str(exc))
        return EXIT_USAGE

    try:
        return run(d)
    except exceptions.InvalidDrawingError as exc:
        _print(render_validation_report(exc.report))
        _error(str(exc))
        return EXIT_NEGATIVE


def _cmd_validate(args: argparse.Namespace, compute: ComputeBackend) -> int:
    def run(d: Drawing) -> int:
        report = validate(d, compute=compute)
        _print(render_validation_report(report))
        return EXIT_OK if report.valid else EXIT_NEGATIVE

    return _with_drawing(args, run)


def _cmd_matrix(args: argparse.Namespace, compute: ComputeBackend) -> int:
    def run(d: Drawing) -> int:
        matrix = star_crossing_matrix(d, compute=compute)
        _print(f"diagonal: {DIAGONAL_CONVENTION}\n{matrix.render()}\n")
        return EXIT_OK

    return _with_drawing(args, run)


def _cmd_certify(args: argparse.Namespace, compute: ComputeBackend) -> int:
    def run(d: Drawing) -> int:
        report = certify_counterexample(d, compute=compute)
        _print(render_certificate(report))
        return EXIT_OK if report.verdict else EXIT_NEGATIVE

    return _with_drawing(args, run)


def _cmd_faces(args: argparse.Namespace, compute: ComputeBackend) -> int:
    def run(d: Drawing) -> int:
        _print(render_face_report(d, face_set(d, compute=compute)))
        return EXIT_OK

    return _with_drawing(args, run)


def _cmd_enumerate(args: argparse.Namespace, compute: ComputeBackend) -> int:
    conventions = Convention.all() if args.all_conventions else [_convention(args)]
    _print("\n".join(render_enumeration(enumerate_k24_torus(c, compute=compute)) for c in conventions))
    return EXIT_OK


def _cmd_audit(args: argparse.Namespace, compute: ComputeBackend) -> int:
    try:
        report = fixture_audit(args.corpus, _convention(args), compute=compute)
    except exceptions.CorpusError as exc:
        _error(str(exc))
        return EXIT_USAGE

    _print(render_audit(report))
    return EXIT_OK if len(report.mismatches) == 0 else EXIT_NEGATIVE


def _cmd_render(args: argparse.Namespace, compute: ComputeBackend) -> int:
    style = RenderStyle(scale=args.scale, show_arrows=not args.no_arrows, crossing_marker=args.crossing_marker)

    def run(d: Drawing) -> int:
        svg = render_svg(d, style, compute=compute)
        try:
            args.output.write_text(svg)
        except OSError as exc:
            _error(str(exc))
            return EXIT_USAGE

        return EXIT_OK

    return _with_drawing(args, run)


_COMMANDS = {
    "validate": _cmd_validate,
    "matrix": _cmd_matrix,
    "certify": _cmd_certify,
    "faces": _cmd_faces,
    "enumerate": _cmd_enumerate,
    "audit": _cmd_audit,
    "render": _cmd_render,
}


def main(argv: Optional[List[str]] = None) -> int:
    """Run the command line and return the exit code.

    Examples
    --------
    .. code-block:: python

        from surfdraw.cli import main

        code = main(["certify", "fixtures/k45_klein_counterexample.tgd"]) # 0
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE

    if args.verbose:
        logger.enable("surfdraw")
        logger.remove()
        logger.add(sys.stderr, level="DEBUG")

    if args.workers == 1:
        compute: ComputeBackend = MainProcessCompute()
    else:
        compute = MultiprocessCompute(max_workers=args.workers, log_workers=args.verbose)

    with compute:
        return _COMMANDS[args.command](args, compute)


if __name__ == "__main__":
    sys.exit(main())
