"""Tests for presentation validation, normalization and single-element minors."""

from __future__ import annotations

import random

import pytest

from mpm_tutte.errors import (
    DomainError,
    InvalidElementError,
    NormalizationError,
    PreconditionError,
)
from mpm_tutte.models import SigmaInterval, SigmaIntervalSystem
from mpm_tutte.oracle import bases_bruteforce
from mpm_tutte.presentation import (
    contract_element,
    delete_element,
    induced_interval_cycle,
    is_antichain,
    normalize_to_antichain,
    reverse_orientation,
    satisfies_condition_c,
    validate,
    without_loops,
)
from mpm_tutte.presentation.families import (
    all_antichains,
    random_antichain,
    seven_element_pair,
    staircase,
    uniform,
    whirl,
)
from mpm_tutte.presentation.validation import sigma_predecessors
from tests.corpus import exhaustive


def _pairs(sys: SigmaIntervalSystem) -> list[tuple[int, int]]:
    return [(iv.first, iv.last) for iv in sys.intervals]


# ─── Validation ──────────────────────────────────────────────


class TestValidate:
    def test_whirl_is_a_multi_path_antichain(self, w3: SigmaIntervalSystem) -> None:
        report = validate(w3)
        assert report.is_antichain
        assert report.satisfies_c
        assert report.loops == frozenset()
        assert not report.is_lattice_path

    def test_wide_uniform_presentation_is_an_antichain(self) -> None:
        sys = SigmaIntervalSystem.from_pairs(6, [(1, 5), (2, 6), (3, 1)])
        assert validate(sys).is_antichain

    def test_shared_first_element_satisfies_c(self) -> None:
        report = validate(SigmaIntervalSystem.from_pairs(5, [(1, 3), (1, 4)]))
        assert not report.is_antichain
        assert report.satisfies_c

    def test_strict_interior_containment_fails_c(self) -> None:
        sys = SigmaIntervalSystem.from_pairs(5, [(2, 3), (1, 4)])
        assert not satisfies_condition_c(sys)
        assert not validate(sys).satisfies_c

    def test_loop_forces_lattice_path(self) -> None:
        report = validate(SigmaIntervalSystem.from_pairs(4, [(1, 2), (2, 3)]))
        assert report.loops == frozenset({4})
        assert report.is_lattice_path

    def test_rank_one_is_lattice_path(self) -> None:
        assert validate(SigmaIntervalSystem.from_pairs(3, [(1, 3)])).is_lattice_path

    def test_staircase_is_lattice_path(self) -> None:
        assert validate(staircase()).is_lattice_path

    def test_free_matroid_is_lattice_path(self) -> None:
        report = validate(SigmaIntervalSystem.from_pairs(3, [(1, 2), (2, 3), (3, 1)]))
        assert report.is_antichain
        assert report.is_lattice_path

    def test_endpoint_outside_ground_set_rejected(self) -> None:
        with pytest.raises(InvalidElementError, match="9"):
            SigmaIntervalSystem.from_pairs(6, [(1, 9)])


class TestIntervalCycle:
    def test_whirl_cycle(self, w3: SigmaIntervalSystem) -> None:
        assert induced_interval_cycle(w3) == (0, 1, 2)

    def test_single_interval_is_fixed(self) -> None:
        assert induced_interval_cycle(SigmaIntervalSystem.from_pairs(3, [(2, 3)])) == (0,)

    def test_wrapping_presentation(self) -> None:
        sys = SigmaIntervalSystem.from_pairs(6, [(1, 5), (2, 6), (3, 1)])
        assert induced_interval_cycle(sys) == (0, 1, 2)

    def test_cycle_from_first_elements_agrees(self) -> None:
        for sys in exhaustive():
            if not sys.intervals:
                continue
            cycle = induced_interval_cycle(sys)
            by_first = sorted(range(sys.rank), key=lambda j: sys.intervals[j].first)
            start = by_first.index(cycle[0])
            assert tuple(by_first[start:] + by_first[:start]) == cycle

    def test_predecessors_invert_the_cycle(self, w3: SigmaIntervalSystem) -> None:
        assert sigma_predecessors(w3) == {0: 2, 1: 0, 2: 1}

    def test_non_antichain_raises(self) -> None:
        with pytest.raises(PreconditionError):
            induced_interval_cycle(SigmaIntervalSystem.from_pairs(5, [(1, 3), (1, 4)]))


# ─── Normalization ───────────────────────────────────────────


class TestNormalize:
    def test_first_element_branch(self) -> None:
        sys = SigmaIntervalSystem.from_pairs(5, [(1, 3), (1, 4)])
        assert _pairs(normalize_to_antichain(sys)) == [(1, 3), (2, 4)]

    def test_last_element_branch(self) -> None:
        sys = SigmaIntervalSystem.from_pairs(4, [(2, 3), (1, 3)])
        assert _pairs(normalize_to_antichain(sys)) == [(2, 3), (1, 2)]

    def test_antichain_is_a_fixed_point(self, w3: SigmaIntervalSystem) -> None:
        assert normalize_to_antichain(w3) == w3

    def test_condition_c_violation_raises(self) -> None:
        with pytest.raises(NormalizationError):
            normalize_to_antichain(SigmaIntervalSystem.from_pairs(5, [(2, 3), (1, 4)]))

    def test_bases_preserved(self) -> None:
        sys = SigmaIntervalSystem.from_pairs(5, [(1, 3), (1, 4), (3, 5)])
        reduced = normalize_to_antichain(sys)
        assert is_antichain(reduced)
        assert bases_bruteforce(reduced) == bases_bruteforce(sys)

    def test_labels_survive(self) -> None:
        sys = SigmaIntervalSystem.from_pairs(
            5, [(1, 3), (1, 4)], labels=("a", "b", "c", "d", "e")
        )
        assert normalize_to_antichain(sys).labels == ("a", "b", "c", "d", "e")


# ─── Minors ──────────────────────────────────────────────────


class TestDeleteElement:
    def test_whirl_minus_six(self, w3: SigmaIntervalSystem) -> None:
        minor = delete_element(w3, 6)
        assert minor.n == 5
        assert _pairs(minor) == [(1, 3), (3, 5), (5, 1)]

    def test_deletion_that_creates_containment(self) -> None:
        minor = delete_element(SigmaIntervalSystem.from_pairs(5, [(1, 3), (2, 4)]), 4)
        assert _pairs(minor) == [(1, 2), (2, 3)]

    def test_delete_loop_keeps_intervals(self) -> None:
        minor = delete_element(SigmaIntervalSystem.from_pairs(4, [(1, 2), (2, 3)]), 4)
        assert _pairs(minor) == [(1, 2), (2, 3)]

    def test_survivors_keep_their_names(self) -> None:
        sys = SigmaIntervalSystem.from_pairs(4, [(1, 2), (2, 3)], labels=("a", "b", "c", "d"))
        assert delete_element(sys, 2).labels == ("a", "c", "d")

    def test_unknown_element_raises(self, w3: SigmaIntervalSystem) -> None:
        with pytest.raises(InvalidElementError):
            delete_element(w3, 7)

    def test_only_element_raises(self) -> None:
        with pytest.raises(DomainError):
            delete_element(SigmaIntervalSystem.from_pairs(1, [(1, 1)]), 1)

    def test_bases_match_oracle(self) -> None:
        for sys in exhaustive(4):
            if sys.n < 2:
                continue
            bases = bases_bruteforce(sys)
            for x in range(1, sys.n + 1):
                if all(x in basis for basis in bases):
                    continue
                expected = {
                    frozenset(e - (e > x) for e in basis) for basis in bases if x not in basis
                }
                assert bases_bruteforce(delete_element(sys, x)) == expected


class TestContractElement:
    def test_two_intervals_merge(self, w3: SigmaIntervalSystem) -> None:
        minor = contract_element(w3, 3)
        assert minor.n == 5
        assert _pairs(minor) == [(1, 4), (4, 1)]

    def test_single_interval_dropped(self, w3: SigmaIntervalSystem) -> None:
        assert _pairs(contract_element(w3, 2)) == [(2, 4), (4, 1)]

    def test_contract_loop_keeps_intervals(self) -> None:
        minor = contract_element(SigmaIntervalSystem.from_pairs(4, [(1, 2), (2, 3)]), 4)
        assert _pairs(minor) == [(1, 2), (2, 3)]

    def test_non_antichain_raises(self) -> None:
        with pytest.raises(PreconditionError):
            contract_element(SigmaIntervalSystem.from_pairs(5, [(1, 3), (1, 4)]), 2)

    def test_bases_match_oracle(self) -> None:
        for sys in exhaustive(4):
            if sys.n < 2:
                continue
            bases = bases_bruteforce(sys)
            for x in range(1, sys.n + 1):
                if not any(x in basis for basis in bases):
                    continue
                expected = {
                    frozenset(e - (e > x) for e in basis - {x}) for basis in bases if x in basis
                }
                assert bases_bruteforce(contract_element(sys, x)) == expected


class TestWithoutLoops:
    def test_counts_and_removes_loops(self) -> None:
        sys = SigmaIntervalSystem.from_pairs(5, [(1, 2), (2, 3)])
        loopless, count = without_loops(sys)
        assert count == 2
        assert loopless is not None
        assert loopless.n == 3

    def test_all_loops(self) -> None:
        loopless, count = without_loops(SigmaIntervalSystem(3, ()))
        assert loopless is None
        assert count == 3


class TestReverseOrientation:
    def test_same_matroid_after_relabelling(self) -> None:
        for sys in exhaustive(4):
            flipped = reverse_orientation(sys)
            relabelled = {frozenset(sys.n + 1 - e for e in b) for b in bases_bruteforce(sys)}
            assert bases_bruteforce(flipped) == relabelled


# ─── Families ────────────────────────────────────────────────


class TestFamilies:
    def test_whirl_intervals(self) -> None:
        assert _pairs(whirl(3)) == [(1, 3), (3, 5), (5, 1)]

    def test_whirl_needs_rank_two(self) -> None:
        with pytest.raises(DomainError):
            whirl(1)

    def test_uniform_intervals(self) -> None:
        assert _pairs(uniform(3, 6)) == [(1, 4), (2, 5), (3, 6)]
        assert len(bases_bruteforce(uniform(3, 6))) == 20

    def test_seven_element_pair_present_one_matroid(self) -> None:
        first, second = seven_element_pair()
        assert bases_bruteforce(first) == bases_bruteforce(second)

    def test_all_antichains_are_antichains(self) -> None:
        systems = list(all_antichains(4))
        assert all(is_antichain(sys) for sys in systems)
        assert SigmaIntervalSystem(4, ()) in systems
        assert SigmaIntervalSystem.from_pairs(4, [(1, 4)]) in systems

    def test_all_antichains_has_no_duplicates(self) -> None:
        systems = list(all_antichains(4))
        keys = {frozenset(_pairs(sys)) for sys in systems}
        assert len(keys) == len(systems)

    def test_random_antichain_is_reproducible(self) -> None:
        a = random_antichain(9, random.Random(7))
        b = random_antichain(9, random.Random(7))
        assert a == b
        assert is_antichain(a)
