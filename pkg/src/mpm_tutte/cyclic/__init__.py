"""Cyclic ground sets and σ-intervals."""

from __future__ import annotations

from mpm_tutte.cyclic.intervals import (
    induced_order,
    interval_contains,
    interval_is_subset,
    interval_length,
    interval_members,
    split_at,
)

__all__ = [
    "induced_order",
    "interval_contains",
    "interval_is_subset",
    "interval_length",
    "interval_members",
    "split_at",
]
