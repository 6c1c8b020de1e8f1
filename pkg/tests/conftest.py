"""Shared test fixtures."""

from __future__ import annotations

from pathlib import Path

import pytest

from mpm_tutte.config import clear_settings_cache
from mpm_tutte.diagram import build_diagram
from mpm_tutte.models import Diagram, SigmaIntervalSystem
from mpm_tutte.presentation.families import uniform, whirl

FIXTURES = Path(__file__).parent / "fixtures"

# x^3 + 3x^2 + 3x + 3xy + 3y + 3y^2 + y^3
W3_TUTTE = {
    (0, 1): 3,
    (0, 2): 3,
    (0, 3): 1,
    (1, 0): 3,
    (1, 1): 3,
    (2, 0): 3,
    (3, 0): 1,
}

W3_NON_BASES = {frozenset({1, 2, 6}), frozenset({2, 3, 4}), frozenset({4, 5, 6})}


@pytest.fixture(autouse=True)
def _clear_settings_cache() -> None:
    """Forget loaded settings so env and file overrides never leak between tests."""
    clear_settings_cache()


@pytest.fixture
def w3() -> SigmaIntervalSystem:
    return whirl(3)


@pytest.fixture
def w3_diagram(w3: SigmaIntervalSystem) -> Diagram:
    return build_diagram(w3, 1)


@pytest.fixture
def u36() -> SigmaIntervalSystem:
    return uniform(3, 6)


@pytest.fixture
def unit_square() -> Diagram:
    """U(1,2): one N and one E step between P = EN and Q = NE."""
    return Diagram(1, 1, 1, "EN", "NE")


@pytest.fixture
def coloop() -> Diagram:
    return Diagram(1, 0, 1, "N", "N")


@pytest.fixture
def k5_diagram() -> Diagram:
    return Diagram(5, 6, 3, "EEEEENENN", "NENNEEEEE")
