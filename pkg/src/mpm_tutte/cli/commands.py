"""The ``mpm`` command line: check, tutte, bases, dual, minor, activities, bench."""

from __future__ import annotations

import argparse
import logging
import sys
from collections.abc import Callable
from pathlib import Path

from mpm_tutte.activities import basis_activities
from mpm_tutte.cli.bench import FAMILIES, format_rows, run_bench
from mpm_tutte.cli.formats import (
    emit_diagram,
    emit_polynomial,
    emit_presentation,
    parse_element,
    parse_input,
)
from mpm_tutte.config import get_settings
from mpm_tutte.diagram import (
    build_diagram,
    classify_greatest_element,
    count_bases,
    initial_minor_diagram,
    label_sets,
    reflect_dual,
)
from mpm_tutte.errors import (
    DomainError,
    InfeasibleOperationError,
    InputFormatError,
    MpmError,
    ResourceGuardError,
)
from mpm_tutte.models import (
    Algorithm,
    Diagram,
    DocumentKind,
    EdgeLabel,
    InputDocument,
    SigmaIntervalSystem,
)
from mpm_tutte.presentation import (
    contract_element,
    delete_element,
    normalize_to_antichain,
    validate,
)
from mpm_tutte.tutte import engine_for, prepare

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_INFEASIBLE = 2
EXIT_GUARD = 3


def run_command(argv: list[str] | None = None) -> int:
    """Parse ``argv``, run one subcommand and return its exit status."""
    try:
        args = _parse_args(argv)
    except SystemExit as exc:
        # usage errors exit 1
        return EXIT_OK if exc.code in (0, None) else EXIT_INPUT
    _configure_logging(args.verbose)
    try:
        if args.settings is not None:
            get_settings(args.settings)
        output = args.handler(args)
    except InfeasibleOperationError as exc:
        return _fail(exc, EXIT_INFEASIBLE)
    except ResourceGuardError as exc:
        return _fail(exc, EXIT_GUARD)
    except (MpmError, OSError) as exc:
        return _fail(exc, EXIT_INPUT)
    sys.stdout.write(output)
    return EXIT_OK


# ─── Subcommands ──────────────────────────────────────────────


def _check(args: argparse.Namespace) -> str:
    document = _read(args.file)
    if isinstance(document.payload, Diagram):
        diagram = document.payload
        kind = classify_greatest_element(diagram).value if diagram.n else "none"
        return (
            f"k={diagram.k}\nm={diagram.m}\nr={diagram.r}\n"
            f"bases={count_bases(diagram)}\ngreatest={kind}\n"
        )
    presentation = document.payload
    report = validate(presentation)
    loops = " ".join(presentation.label(e) for e in sorted(report.loops))
    if not report.satisfies_c:
        kind = "invalid"
    elif report.is_lattice_path:
        kind = "lattice-path"
    else:
        kind = "multi-path"
    return (
        f"antichain={_flag(report.is_antichain)}\n"
        f"condition_c={_flag(report.satisfies_c)}\n"
        f"loops={loops}\n"
        f"lattice_path={_flag(report.is_lattice_path)}\n"
        f"class={kind}\n"
    )


def _tutte(args: argparse.Namespace) -> str:
    document = _read(args.file)
    engine = engine_for(args.algo)
    if isinstance(document.payload, Diagram):
        diagram = document.payload
        polynomial = engine.run_diagram(diagram).polynomial
        r, m = diagram.r, diagram.m
    else:
        presentation = document.payload
        polynomial = engine.run(presentation).polynomial
        loopless, _ = prepare(presentation)
        r = 0 if loopless is None else loopless.rank
        m = presentation.n - r
    if args.eval is not None:
        x, y = args.eval
        return f"{polynomial.evaluate(x, y)}\n"
    return emit_polynomial(polynomial.resized(r, m), r, m)


def _bases(args: argparse.Namespace) -> str:
    document = _read(args.file)
    diagram, names = _as_diagram(document)
    if diagram is None:
        return "1\n" if args.count else "\n"
    if args.count:
        return f"{count_bases(diagram)}\n"
    listing = sorted(tuple(sorted(basis)) for basis in label_sets(diagram))
    return "".join(" ".join(names(e) for e in basis) + "\n" for basis in listing)


def _dual(args: argparse.Namespace) -> str:
    document = _read(args.file)
    diagram, _ = _as_diagram(document)
    if diagram is None:
        raise DomainError("A rank-0 presentation has no diagram to reflect.")
    return emit_diagram(reflect_dual(diagram))


def _minor(args: argparse.Namespace) -> str:
    document = _read(args.file)
    operations: list[tuple[EdgeLabel, str]] = args.ops or []
    if isinstance(document.payload, Diagram):
        diagram = document.payload
        for label, name in operations:
            diagram = _diagram_minor(diagram, label, name)
        return emit_diagram(diagram)

    presentation = _antichain(document.payload)
    for label, name in operations:
        element = parse_element(presentation, name)
        if label is EdgeLabel.DELETE:
            presentation = delete_element(presentation, element)
        else:
            presentation = contract_element(presentation, element)
        logger.debug("Applied %s %s: n=%d", label.value, name, presentation.n)
    return emit_presentation(presentation)


def _activities(args: argparse.Namespace) -> str:
    document = _read(args.file)
    tokens = [token for token in args.basis.replace(",", " ").split() if token]
    if isinstance(document.payload, Diagram):
        basis = frozenset(_int_label(document.payload, token) for token in tokens)
        internal, external = basis_activities(document.payload, basis)
    else:
        presentation = _antichain(document.payload)
        basis = frozenset(parse_element(presentation, token) for token in tokens)
        if presentation.rank == 0:
            if basis:
                raise DomainError(f"{sorted(basis)} is not a basis.")
            internal, external = 0, presentation.n
        else:
            internal, external = basis_activities(build_diagram(presentation, 1), basis)
    return f"internal={internal} external={external}\n"


def _bench(args: argparse.Namespace) -> str:
    defaults = get_settings().bench
    family = args.family or defaults.family
    sizes = args.sizes or list(defaults.sizes)
    repeats = args.repeats or defaults.repeats
    return format_rows(run_bench(family, sizes, args.algo, repeats))


# ─── Helpers ──────────────────────────────────────────────────


def _read(path: Path) -> InputDocument:
    return parse_input(path.read_text(encoding="utf-8"))


def _antichain(presentation: SigmaIntervalSystem) -> SigmaIntervalSystem:
    report = validate(presentation)
    if report.is_antichain:
        return presentation
    return normalize_to_antichain(presentation)


def _as_diagram(
    document: InputDocument,
) -> tuple[Diagram | None, Callable[[int], str]]:
    """The diagram to work on and a namer for its labels (None for rank 0)."""
    if isinstance(document.payload, Diagram):
        return document.payload, str
    presentation = _antichain(document.payload)
    if presentation.rank == 0:
        return None, presentation.label
    # anchored at 1, label j carries element j
    return build_diagram(presentation, 1), presentation.label


def _diagram_minor(diagram: Diagram, label: EdgeLabel, name: str) -> Diagram:
    element = _int_label(diagram, name)
    if element != diagram.n:
        raise DomainError(
            f"Diagram minors act on the greatest element {diagram.n}, not {element}."
        )
    deleted = (element,) if label is EdgeLabel.DELETE else ()
    contracted = (element,) if label is EdgeLabel.CONTRACT else ()
    child = initial_minor_diagram(diagram, deleted, contracted)
    if child is None:
        verb = "delete" if label is EdgeLabel.DELETE else "contract"
        raise InfeasibleOperationError(f"Cannot {verb} element {element} of this diagram.")
    return child


def _int_label(diagram: Diagram, token: str) -> int:
    try:
        value = int(token)
    except ValueError:
        raise InputFormatError(f"Diagram labels are integers, got '{token}'.") from None
    if not 1 <= value <= diagram.n:
        raise DomainError(f"Label {value} is outside 1..{diagram.n}.")
    return value


def _flag(value: bool) -> str:
    return "true" if value else "false"


def _fail(exc: BaseException, status: int) -> int:
    sys.stderr.write(f"error: {exc}\n")
    return status


def _configure_logging(verbosity: int) -> None:
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity >= 2:
        level = logging.DEBUG
    logging.basicConfig(
        level=level,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
        force=True,
    )


def _tagged(label: EdgeLabel) -> Callable[[str], tuple[EdgeLabel, str]]:
    def parse(value: str) -> tuple[EdgeLabel, str]:
        return label, value

    return parse


def _int_list(value: str) -> list[int]:
    try:
        return [int(part) for part in value.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"Expected comma-separated integers: {value}") from None


def _parse_args(argv: list[str] | None = None) -> argparse.Namespace:
    parser = argparse.ArgumentParser(
        prog="mpm",
        description="Multi-path matroids: validation, diagrams, minors and Tutte polynomials.",
    )
    parser.add_argument(
        "-v",
        "--verbose",
        action="count",
        default=0,
        help="Log INFO with -v, DEBUG with -vv (to stderr).",
    )
    parser.add_argument(
        "--settings",
        type=Path,
        default=None,
        help="YAML settings override (default: $MPM_TUTTE_SETTINGS).",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    check = commands.add_parser("check", help="Report structural flags of an input file.")
    check.add_argument("file", type=Path)
    check.set_defaults(handler=_check)

    tutte = commands.add_parser("tutte", help="Print the Tutte polynomial.")
    tutte.add_argument("file", type=Path)
    tutte.add_argument(
        "--algo",
        choices=[a.value for a in Algorithm],
        default=Algorithm.DP.value,
        help="Engine to use.",
    )
    tutte.add_argument(
        "--eval",
        nargs=2,
        type=int,
        metavar=("X", "Y"),
        default=None,
        help="Print t(X, Y) at integer X, Y instead of the coefficients.",
    )
    tutte.set_defaults(handler=_tutte)

    bases = commands.add_parser("bases", help="List the bases, or count them.")
    bases.add_argument("file", type=Path)
    bases.add_argument("--count", action="store_true", help="Print only the number of bases.")
    bases.set_defaults(handler=_bases)

    dual = commands.add_parser("dual", help="Emit the diagram of the dual matroid.")
    dual.add_argument("file", type=Path)
    dual.set_defaults(handler=_dual)

    minor = commands.add_parser("minor", help="Delete and contract elements left to right.")
    minor.add_argument("file", type=Path)
    minor.add_argument(
        "--delete", dest="ops", action="append", type=_tagged(EdgeLabel.DELETE), metavar="E"
    )
    minor.add_argument(
        "--contract", dest="ops", action="append", type=_tagged(EdgeLabel.CONTRACT), metavar="E"
    )
    minor.set_defaults(handler=_minor)

    activities = commands.add_parser("activities", help="Internal and external activity.")
    activities.add_argument("file", type=Path)
    activities.add_argument(
        "--basis", required=True, help="Basis elements, comma- or space-separated."
    )
    activities.set_defaults(handler=_activities)

    bench = commands.add_parser("bench", help="Time an engine on a family of sizes (CSV).")
    bench.add_argument("--family", choices=FAMILIES, default=None)
    bench.add_argument("--sizes", type=_int_list, default=None, help="e.g. 20,40,80,160")
    bench.add_argument(
        "--algo",
        choices=[Algorithm.DP.value, Algorithm.ACTIVITIES.value],
        default=Algorithm.DP.value,
    )
    bench.add_argument("--repeats", type=int, default=None)
    bench.set_defaults(handler=_bench)

    return parser.parse_args(argv)
