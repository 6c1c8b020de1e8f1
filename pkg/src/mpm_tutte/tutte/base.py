"""Tutte engine protocol -- one implementation per algorithm."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Protocol

from mpm_tutte.models import Algorithm, Diagram, SigmaIntervalSystem
from mpm_tutte.tutte.polynomial import BivariatePolynomial


@dataclass(frozen=True, slots=True)
class TutteRun:
    """A polynomial plus the engine's work measure (ν for the graph engine)."""

    polynomial: BivariatePolynomial
    nu: int


class TutteEnginePort(Protocol):
    """Protocol for algorithm-specific Tutte polynomial computation."""

    algorithm: Algorithm

    def run(self, sys: SigmaIntervalSystem) -> TutteRun:
        """Compute t(M[𝓘]) and report the work measure."""
        ...

    def run_diagram(self, diagram: Diagram) -> TutteRun:
        """Compute the Tutte polynomial of the matroid drawn by ``diagram``."""
        ...
