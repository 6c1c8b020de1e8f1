"""Brute-force ground truth: matching rank, bases, subset-expansion Tutte, activities."""

from __future__ import annotations

from mpm_tutte.oracle.bruteforce import (
    activities_by_definition,
    bases_bruteforce,
    check_guard,
    independent_sets_count,
    is_circuit,
    is_connected_bruteforce,
    is_spanning,
    spanning_sets_count,
    tutte_subset_expansion,
)
from mpm_tutte.oracle.matching import as_set_system, rank
from mpm_tutte.oracle.paths import (
    b_paths_bruteforce,
    gamma_bruteforce,
    pseudo_activities,
    region_paths,
)

__all__ = [
    "activities_by_definition",
    "as_set_system",
    "b_paths_bruteforce",
    "bases_bruteforce",
    "check_guard",
    "gamma_bruteforce",
    "independent_sets_count",
    "is_circuit",
    "is_connected_bruteforce",
    "is_spanning",
    "pseudo_activities",
    "rank",
    "region_paths",
    "spanning_sets_count",
    "tutte_subset_expansion",
]
