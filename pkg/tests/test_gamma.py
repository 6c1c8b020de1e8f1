"""Tests for the Γ table of constrained path counts."""

from __future__ import annotations

from itertools import product

import pytest

from mpm_tutte.activities import compute_gamma
from mpm_tutte.config import get_settings
from mpm_tutte.diagram import build_diagram
from mpm_tutte.errors import DomainError
from mpm_tutte.models import Diagram
from mpm_tutte.oracle import gamma_bruteforce, pseudo_activities, region_paths
from tests.corpus import exhaustive


def _assert_matches_enumeration(diagram: Diagram) -> None:
    table = compute_gamma(diagram)
    for end in range(1, diagram.k + 1):
        for d in range(diagram.n + 1):
            for y in range(diagram.lower[d], diagram.upper[d] + 1):
                for a, b in product(range(diagram.r + 1), range(diagram.m + 1)):
                    for flags in product((False, True), repeat=2):
                        expected = gamma_bruteforce(diagram, (d, y), end, a, b, *flags)
                        assert table.value((d, y), end, a, b, *flags) == expected, (
                            diagram.key,
                            end,
                            (d, y),
                            (a, b),
                            flags,
                        )


class TestUnitSquare:
    def test_values_from_the_corner(self, unit_square: Diagram) -> None:
        table = compute_gamma(unit_square)
        assert table.value((0, 0), 1, 1, 0, True, True) == 1
        assert table.value((0, 0), 1, 0, 1, True, True) == 1
        assert table.value((0, 0), 1, 1, 1, True, True) == 0

    def test_negative_budget_reads_zero(self, unit_square: Diagram) -> None:
        assert compute_gamma(unit_square).value((0, 0), 1, -1, 0, True, True) == 0

    def test_outside_point_reads_zero(self, unit_square: Diagram) -> None:
        assert compute_gamma(unit_square).value((1, 5), 1, 0, 0, True, True) == 0


class TestAgainstEnumeration:
    def test_whirl(self, w3_diagram: Diagram) -> None:
        _assert_matches_enumeration(w3_diagram)

    def test_small_corpus(self) -> None:
        for sys in exhaustive(4):
            for x in range(1, sys.n + 1):
                _assert_matches_enumeration(build_diagram(sys, x))

    @pytest.mark.slow
    def test_corpus_diagrams_up_to_seven_elements(self) -> None:
        seen: set[tuple[int, int, int, str, str]] = set()
        for sys in exhaustive(get_settings().corpus.slow_exhaustive_max_n):
            diagram = build_diagram(sys, 1)
            if diagram.key in seen:
                continue
            seen.add(diagram.key)
            _assert_matches_enumeration(diagram)

    @pytest.mark.slow
    def test_extended_diagram(self, k5_diagram: Diagram) -> None:
        _assert_matches_enumeration(k5_diagram)


class TestRetain:
    def test_only_requested_entries_are_kept(self, w3_diagram: Diagram) -> None:
        full = compute_gamma(w3_diagram)
        wanted = {(1, 2, 1), (2, 2, 2)}
        partial = compute_gamma(w3_diagram, retain=wanted)
        assert set(partial.entries) <= wanted
        for end, d, y in wanted:
            assert partial.polynomials(end, (d, y)) == full.polynomials(end, (d, y))
        assert partial.evaluations == full.evaluations


class TestEnumerationHelpers:
    def test_region_paths_of_unit_square(self, unit_square: Diagram) -> None:
        assert sorted(region_paths(unit_square, 0, 0, 1)) == [(0, 0, 1), (0, 1, 1)]

    def test_pseudo_activities(self, unit_square: Diagram) -> None:
        assert pseudo_activities(unit_square, 0, (0, 0, 1)) == (0, 1)
        assert pseudo_activities(unit_square, 0, (0, 1, 1)) == (1, 0)

    def test_bad_end(self, unit_square: Diagram) -> None:
        with pytest.raises(DomainError):
            gamma_bruteforce(unit_square, (0, 0), 2, 0, 0, False, False)
