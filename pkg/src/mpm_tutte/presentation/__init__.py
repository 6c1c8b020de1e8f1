"""σ-interval presentations: validation, normalization, single-element minors."""

from __future__ import annotations

from mpm_tutte.presentation.minors import (
    contract_element,
    delete_element,
    reverse_orientation,
    without_loops,
)
from mpm_tutte.presentation.normalize import normalize_to_antichain
from mpm_tutte.presentation.validation import (
    induced_interval_cycle,
    is_antichain,
    loops,
    satisfies_condition_c,
    validate,
)

__all__ = [
    "contract_element",
    "delete_element",
    "induced_interval_cycle",
    "is_antichain",
    "loops",
    "normalize_to_antichain",
    "reverse_orientation",
    "satisfies_condition_c",
    "validate",
    "without_loops",
]
