"""Tests for presentation, diagram and polynomial text formats."""

from __future__ import annotations

import pytest

from mpm_tutte.cli.formats import (
    emit_diagram,
    emit_polynomial,
    emit_presentation,
    parse_element,
    parse_input,
    parse_polynomial,
)
from mpm_tutte.diagram import EMPTY_DIAGRAM
from mpm_tutte.errors import DiagramError, InputFormatError
from mpm_tutte.models import Diagram, DocumentKind, SigmaInterval, SigmaIntervalSystem
from mpm_tutte.tutte import BivariatePolynomial
from tests.conftest import FIXTURES, W3_TUTTE


class TestParsePresentation:
    def test_whirl_fixture(self, w3: SigmaIntervalSystem) -> None:
        document = parse_input((FIXTURES / "w3.mpm").read_text(encoding="utf-8"))
        assert document.kind is DocumentKind.PRESENTATION
        assert document.payload == w3
        assert document.labels == ("1", "2", "3", "4", "5", "6")

    def test_named_elements(self) -> None:
        document = parse_input("elements x y z\ninterval y x  # wraps\n")
        sys = document.payload
        assert isinstance(sys, SigmaIntervalSystem)
        assert sys.intervals == (SigmaInterval(2, 1),)
        assert sys.labels == ("x", "y", "z")
        assert parse_element(sys, "z") == 3

    def test_comments_and_blank_lines(self) -> None:
        document = parse_input("# header\n\nelements 2\n\ninterval 1 2\n")
        assert document.payload == SigmaIntervalSystem.from_pairs(2, [(1, 2)])

    @pytest.mark.parametrize(
        ("text", "line"),
        [
            ("elements 3\ninterval 1 4\n", 2),
            ("interval 1 2\nelements 3\n", 1),
            ("elements 3\nelements 4\n", 2),
            ("elements 3\ninterval 1\n", 2),
            ("elements a b\ninterval a c\n", 2),
            ("elements a a\n", 1),
            ("elements 3\nbogus 1\n", 2),
        ],
    )
    def test_errors_carry_line_numbers(self, text: str, line: int) -> None:
        with pytest.raises(InputFormatError) as info:
            parse_input(text)
        assert info.value.line == line
        assert str(info.value).startswith(f"line {line}:")

    def test_empty_input(self) -> None:
        with pytest.raises(InputFormatError):
            parse_input("# nothing\n")

    def test_unknown_element_name(self) -> None:
        sys = SigmaIntervalSystem.from_pairs(2, [(1, 2)])
        with pytest.raises(InputFormatError):
            parse_element(sys, "7")


class TestParseDiagram:
    def test_fixture(self, k5_diagram: Diagram) -> None:
        document = parse_input((FIXTURES / "k5.diagram").read_text(encoding="utf-8"))
        assert document.kind is DocumentKind.DIAGRAM
        assert document.payload == k5_diagram

    def test_bare_words_for_the_empty_diagram(self) -> None:
        text = emit_diagram(EMPTY_DIAGRAM)
        assert text == "diagram\nk 1\nm 0\nr 0\nP\nQ\n"
        assert parse_input(text).payload == EMPTY_DIAGRAM

    def test_missing_field(self) -> None:
        with pytest.raises(InputFormatError, match="missing"):
            parse_input("diagram\nk 1\nm 0\nr 1\nP N\n")

    def test_duplicate_field(self) -> None:
        with pytest.raises(InputFormatError) as info:
            parse_input("diagram\nk 1\nk 2\n")
        assert info.value.line == 3

    def test_invariant_violation(self) -> None:
        with pytest.raises(DiagramError):
            parse_input("diagram\nk 1\nm 1\nr 1\nP NE\nQ EN\n")


class TestEmit:
    def test_presentation_orders_intervals(self) -> None:
        sys = SigmaIntervalSystem.from_pairs(6, [(5, 1), (1, 3), (3, 5)])
        assert emit_presentation(sys) == (
            "elements 6\ninterval 1 3\ninterval 3 5\ninterval 5 1\n"
        )

    def test_presentation_keeps_names(self) -> None:
        sys = SigmaIntervalSystem.from_pairs(3, [(2, 1)], ("x", "y", "z"))
        assert emit_presentation(sys) == "elements x y z\ninterval y x\n"

    def test_polynomial_listing(self) -> None:
        text = emit_polynomial(BivariatePolynomial.from_terms(W3_TUTTE), 3, 3)
        assert text == (FIXTURES / "w3_tutte.txt").read_text(encoding="utf-8")

    def test_polynomial_parse(self) -> None:
        polynomial, r, m = parse_polynomial((FIXTURES / "w3_tutte.txt").read_text(encoding="utf-8"))
        assert (r, m) == (3, 3)
        assert polynomial.terms() == W3_TUTTE

    def test_polynomial_term_outside_header(self) -> None:
        with pytest.raises(InputFormatError):
            parse_polynomial("tutte r=1 m=1\n2 0 1\n")

    def test_polynomial_bad_header(self) -> None:
        with pytest.raises(InputFormatError) as info:
            parse_polynomial("poly 1 1\n")
        assert info.value.line == 1
