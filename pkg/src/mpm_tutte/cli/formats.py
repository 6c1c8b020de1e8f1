"""Text formats: presentation and diagram files, polynomial listings.

Presentation::

    elements 6            # or: elements a b c d e f
    interval 1 3
    interval 3 5
    interval 5 1

Diagram (an empty word is written as a bare ``P`` or ``Q``)::

    diagram
    k 2
    m 3
    r 3
    P ENENEN
    Q NENENE
"""

from __future__ import annotations

from collections.abc import Iterator

from mpm_tutte.errors import InputFormatError, MpmError
from mpm_tutte.models import (
    Diagram,
    DocumentKind,
    InputDocument,
    SigmaInterval,
    SigmaIntervalSystem,
)
from mpm_tutte.tutte.polynomial import BivariatePolynomial

_DIAGRAM_KEYS = ("k", "m", "r", "P", "Q")


def parse_input(text: str) -> InputDocument:
    """Parse a presentation or diagram file.

    Raises:
        InputFormatError: On syntax errors or out-of-range endpoints, with the line number.
        DiagramError: If a diagram violates its invariants.
    """
    lines = list(_significant_lines(text))
    if not lines:
        raise InputFormatError("Empty input: expected 'elements' or 'diagram'.")
    number, tokens = lines[0]
    if tokens[0] == "diagram":
        if len(tokens) != 1:
            raise InputFormatError("'diagram' takes no arguments.", number)
        return InputDocument(DocumentKind.DIAGRAM, _parse_diagram(lines[1:]))
    if tokens[0] == "elements":
        sys = _parse_presentation(lines)
        return InputDocument(
            DocumentKind.PRESENTATION, sys, sys.labels or _default_labels(sys.n)
        )
    raise InputFormatError(f"Expected 'elements' or 'diagram', got '{tokens[0]}'.", number)


def parse_element(sys: SigmaIntervalSystem, name: str) -> int:
    """The canonical element named ``name`` in ``sys``.

    Raises:
        InputFormatError: If no element has that name.
    """
    labels = sys.labels or _default_labels(sys.n)
    try:
        return labels.index(name) + 1
    except ValueError:
        raise InputFormatError(f"Unknown element '{name}'.") from None


def emit_presentation(sys: SigmaIntervalSystem) -> str:
    """Canonical presentation text: intervals ordered by first element, then last."""
    labels = sys.labels or _default_labels(sys.n)
    if labels == _default_labels(sys.n):
        lines = [f"elements {sys.n}"]
    else:
        lines = ["elements " + " ".join(labels)]
    for iv in sorted(sys.intervals, key=lambda iv: (iv.first, iv.last)):
        lines.append(f"interval {labels[iv.first - 1]} {labels[iv.last - 1]}")
    return "\n".join(lines) + "\n"


def emit_diagram(diagram: Diagram) -> str:
    lines = ["diagram", f"k {diagram.k}", f"m {diagram.m}", f"r {diagram.r}"]
    lines.append(f"P {diagram.p_word}".rstrip())
    lines.append(f"Q {diagram.q_word}".rstrip())
    return "\n".join(lines) + "\n"


def emit_polynomial(polynomial: BivariatePolynomial, r: int, m: int) -> str:
    """Header ``tutte r=<r> m=<m>`` then ``i j coeff`` for every nonzero term."""
    lines = [f"tutte r={r} m={m}"]
    lines.extend(f"{i} {j} {value}" for (i, j), value in sorted(polynomial.terms().items()))
    return "\n".join(lines) + "\n"


def parse_polynomial(text: str) -> tuple[BivariatePolynomial, int, int]:
    """Inverse of :func:`emit_polynomial`; returns (polynomial, r, m).

    Raises:
        InputFormatError: On a malformed header or term line.
    """
    lines = list(_significant_lines(text))
    if not lines:
        raise InputFormatError("Empty polynomial listing.")
    number, header = lines[0]
    if len(header) != 3 or header[0] != "tutte":
        raise InputFormatError("Expected 'tutte r=<r> m=<m>'.", number)
    r = _int(header[1].removeprefix("r="), number)
    m = _int(header[2].removeprefix("m="), number)
    terms: dict[tuple[int, int], int] = {}
    for number, tokens in lines[1:]:
        if len(tokens) != 3:
            raise InputFormatError("Expected 'i j coeff'.", number)
        i, j, value = (_int(token, number) for token in tokens)
        terms[(i, j)] = value
    try:
        return BivariatePolynomial.from_terms(terms, r=r, m=m), r, m
    except MpmError as exc:
        raise InputFormatError(str(exc)) from exc


def _significant_lines(text: str) -> Iterator[tuple[int, list[str]]]:
    for number, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split("#", 1)[0].split()
        if tokens:
            yield number, tokens


def _default_labels(n: int) -> tuple[str, ...]:
    return tuple(str(e) for e in range(1, n + 1))


def _int(token: str, line: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise InputFormatError(f"Expected an integer, got '{token}'.", line) from None


def _parse_presentation(lines: list[tuple[int, list[str]]]) -> SigmaIntervalSystem:
    labels: tuple[str, ...] | None = None
    pairs: list[tuple[int, int]] = []
    for number, tokens in lines:
        keyword, args = tokens[0], tokens[1:]
        if keyword == "elements":
            if labels is not None:
                raise InputFormatError("Duplicate 'elements' line.", number)
            labels = _element_names(args, number)
        elif keyword == "interval":
            if labels is None:
                raise InputFormatError("'interval' before 'elements'.", number)
            if len(args) != 2:
                raise InputFormatError("'interval' takes a first and a last element.", number)
            first, last = (_resolve(labels, name, number) for name in args)
            pairs.append((first, last))
        else:
            raise InputFormatError(f"Unknown keyword '{keyword}'.", number)
    if labels is None:
        raise InputFormatError("Missing 'elements' line.")
    named = None if labels == _default_labels(len(labels)) else labels
    return SigmaIntervalSystem(
        len(labels), tuple(SigmaInterval(first, last) for first, last in pairs), named
    )


def _element_names(args: list[str], line: int) -> tuple[str, ...]:
    if not args:
        raise InputFormatError("'elements' needs a count or a list of names.", line)
    if len(args) == 1 and args[0].isdigit():
        n = int(args[0])
        if n < 1:
            raise InputFormatError("The ground set must be nonempty.", line)
        return _default_labels(n)
    if len(set(args)) != len(args):
        raise InputFormatError("Repeated element name.", line)
    return tuple(args)


def _resolve(labels: tuple[str, ...], name: str, line: int) -> int:
    try:
        return labels.index(name) + 1
    except ValueError:
        if name.lstrip("-").isdigit():
            raise InputFormatError(
                f"Endpoint {name} is outside 1..{len(labels)}.", line
            ) from None
        raise InputFormatError(f"Unknown element '{name}'.", line) from None


def _parse_diagram(lines: list[tuple[int, list[str]]]) -> Diagram:
    values: dict[str, tuple[str, int]] = {}
    for number, tokens in lines:
        key = tokens[0]
        if key not in _DIAGRAM_KEYS:
            raise InputFormatError(f"Unknown diagram field '{key}'.", number)
        if key in values:
            raise InputFormatError(f"Duplicate diagram field '{key}'.", number)
        if len(tokens) > 2 or (len(tokens) == 1 and key not in ("P", "Q")):
            raise InputFormatError(f"Field '{key}' takes one value.", number)
        values[key] = (tokens[1] if len(tokens) == 2 else "", number)
    missing = [key for key in _DIAGRAM_KEYS if key not in values]
    if missing:
        raise InputFormatError(f"Diagram is missing fields {missing}.")
    k, m, r = (_int(*values[key]) for key in ("k", "m", "r"))
    return Diagram(k, m, r, values["P"][0], values["Q"][0])
