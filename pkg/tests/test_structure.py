"""Tests for spanning circuits and minimal presentations."""

from __future__ import annotations

import pytest

from mpm_tutte.cli.formats import parse_input
from mpm_tutte.config import get_settings
from mpm_tutte.errors import NotApplicableError, PreconditionError, ResourceGuardError
from mpm_tutte.models import SigmaIntervalSystem
from mpm_tutte.oracle import is_circuit, is_connected_bruteforce, is_spanning
from mpm_tutte.presentation import validate
from mpm_tutte.presentation.families import seven_element_pair, uniform, whirl
from mpm_tutte.structure import (
    fundamental_set,
    interval_sizes_within_bound,
    is_minimal_sigma_presentation,
    spanning_circuit,
    verify_cocircuit_presentation,
)
from tests.conftest import FIXTURES
from tests.corpus import exhaustive


def _fixture_system(name: str) -> SigmaIntervalSystem:
    payload = parse_input((FIXTURES / name).read_text(encoding="utf-8")).payload
    assert isinstance(payload, SigmaIntervalSystem)
    return payload


# ─── Spanning circuits ───────────────────────────────────────


class TestSpanningCircuit:
    @pytest.mark.parametrize("x", [2, 4, 6])
    def test_whirl(self, w3: SigmaIntervalSystem, x: int) -> None:
        assert spanning_circuit(w3, x) == frozenset({1, 3, 5, x})

    def test_fundamental_set(self, w3: SigmaIntervalSystem) -> None:
        assert fundamental_set(w3) == frozenset({1, 3, 5})

    def test_first_element_rejected(self, w3: SigmaIntervalSystem) -> None:
        with pytest.raises(PreconditionError):
            spanning_circuit(w3, 3)

    def test_lattice_path_rejected(self, u36: SigmaIntervalSystem) -> None:
        with pytest.raises(NotApplicableError):
            spanning_circuit(u36, 5)

    def test_non_antichain_rejected(self) -> None:
        with pytest.raises(PreconditionError):
            spanning_circuit(SigmaIntervalSystem.from_pairs(5, [(1, 3), (1, 4)]), 5)

    def test_every_multi_path_input_has_them(self) -> None:
        for sys in exhaustive(5):
            if validate(sys).is_lattice_path:
                continue
            fundamental = fundamental_set(sys)
            for x in set(range(1, sys.n + 1)) - fundamental:
                circuit = spanning_circuit(sys, x)
                assert is_circuit(sys, circuit)
                assert is_spanning(sys, circuit)
            assert is_connected_bruteforce(sys), sys

    def test_larger_whirl(self) -> None:
        sys = whirl(5)
        assert spanning_circuit(sys, 10) == frozenset({1, 3, 5, 7, 9, 10})


# ─── Minimal presentations ───────────────────────────────────


class TestCocircuits:
    def test_whirl(self, w3: SigmaIntervalSystem) -> None:
        assert verify_cocircuit_presentation(w3)

    def test_uniform_with_short_intervals(self, u36: SigmaIntervalSystem) -> None:
        assert verify_cocircuit_presentation(u36)
        assert interval_sizes_within_bound(u36)

    def test_uniform_with_long_intervals(self) -> None:
        sys = _fixture_system("u36b.mpm")
        assert not verify_cocircuit_presentation(sys)
        assert not interval_sizes_within_bound(sys)

    def test_guard(self) -> None:
        with pytest.raises(ResourceGuardError):
            verify_cocircuit_presentation(uniform(2, 24))


class TestMinimality:
    def test_uniform(self, u36: SigmaIntervalSystem) -> None:
        assert is_minimal_sigma_presentation(u36)
        assert not is_minimal_sigma_presentation(_fixture_system("u36b.mpm"))

    def test_seven_element_pair(self) -> None:
        first, second = seven_element_pair()
        assert verify_cocircuit_presentation(first)
        assert verify_cocircuit_presentation(second)
        assert is_minimal_sigma_presentation(first)
        assert is_minimal_sigma_presentation(second)

    def test_cocircuit_presentations_are_minimal(self) -> None:
        for sys in exhaustive(5):
            if verify_cocircuit_presentation(sys):
                assert is_minimal_sigma_presentation(sys), sys

    def test_minimal_presentations_are_cocircuit_presentations(self) -> None:
        for sys in exhaustive(5):
            if is_minimal_sigma_presentation(sys):
                assert verify_cocircuit_presentation(sys), sys

    @pytest.mark.slow
    def test_minimality_matches_cocircuits_up_to_seven(self) -> None:
        for sys in exhaustive(get_settings().corpus.slow_exhaustive_max_n):
            assert is_minimal_sigma_presentation(sys) == verify_cocircuit_presentation(sys), sys

    def test_minimal_presentations_have_short_intervals(self) -> None:
        for sys in exhaustive(5):
            if is_minimal_sigma_presentation(sys):
                assert interval_sizes_within_bound(sys), sys

    def test_needs_antichain(self) -> None:
        with pytest.raises(PreconditionError):
            is_minimal_sigma_presentation(SigmaIntervalSystem.from_pairs(5, [(1, 3), (1, 4)]))
