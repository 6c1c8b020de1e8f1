"""Structural results: spanning circuits and minimal presentations."""

from __future__ import annotations

from mpm_tutte.structure.circuits import fundamental_set, spanning_circuit
from mpm_tutte.structure.minimality import (
    interval_sizes_within_bound,
    is_minimal_sigma_presentation,
    verify_cocircuit_presentation,
)

__all__ = [
    "fundamental_set",
    "interval_sizes_within_bound",
    "is_minimal_sigma_presentation",
    "spanning_circuit",
    "verify_cocircuit_presentation",
]
