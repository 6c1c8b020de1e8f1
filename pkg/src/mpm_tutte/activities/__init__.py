"""Basis activities read off lattice paths, and the Γ-table Tutte engine."""

from __future__ import annotations

from mpm_tutte.activities.counting import (
    activity_polynomial,
    count_activity_classes,
    tutte_via_activities,
    tutte_via_activities_diagram,
)
from mpm_tutte.activities.gamma import GammaTable, compute_gamma
from mpm_tutte.activities.representation import (
    basis_activities,
    exchange_feasible,
    represent,
    touching_start,
    valid_starts,
)

__all__ = [
    "GammaTable",
    "activity_polynomial",
    "basis_activities",
    "compute_gamma",
    "count_activity_classes",
    "exchange_feasible",
    "represent",
    "touching_start",
    "tutte_via_activities",
    "tutte_via_activities_diagram",
    "valid_starts",
]
