"""Reduce a presentation satisfying condition (C) to an antichain of σ-intervals."""

from __future__ import annotations

import logging
from collections.abc import Callable

from mpm_tutte.cyclic import interval_contains, interval_length
from mpm_tutte.errors import NormalizationError
from mpm_tutte.models import CyclicOrder, SigmaInterval, SigmaIntervalSystem
from mpm_tutte.presentation.validation import containment_pairs

logger = logging.getLogger(__name__)


def normalize_to_antichain(sys: SigmaIntervalSystem) -> SigmaIntervalSystem:
    """Trim contained-in intervals until no containment remains.

    Each round takes the containment I ⊆ J whose J has the smallest first element
    (longer J first, then lower indices). If f_J is in I, the longest interval
    starting at f_J loses its first element; otherwise, if l_J is in I, the longest
    interval ending at l_J loses its last element. Emptied intervals are dropped.
    The basis set is unchanged at every step.

    Raises:
        NormalizationError: If some containment has neither endpoint of J in I.
    """
    order = sys.order
    intervals = list(sys.intervals)

    while True:
        current = SigmaIntervalSystem(sys.n, tuple(intervals), sys.labels)
        pairs = containment_pairs(current)
        if not pairs:
            return current

        i, j = min(
            pairs,
            key=lambda pair: (
                intervals[pair[1]].first,
                -interval_length(order, intervals[pair[1]]),
                pair[1],
                pair[0],
            ),
        )
        inner, outer = intervals[i], intervals[j]
        if interval_contains(order, inner, outer.first):
            target = _longest(order, intervals, lambda iv: iv.first == outer.first)
            trimmed = intervals[target]
            replacement = (
                None
                if trimmed.first == trimmed.last
                else SigmaInterval(order.successor(trimmed.first), trimmed.last)
            )
        elif interval_contains(order, inner, outer.last):
            target = _longest(order, intervals, lambda iv: iv.last == outer.last)
            trimmed = intervals[target]
            replacement = (
                None
                if trimmed.first == trimmed.last
                else SigmaInterval(trimmed.first, order.predecessor(trimmed.last))
            )
        else:
            raise NormalizationError(
                f"Interval [{inner.first},{inner.last}] lies in [{outer.first},{outer.last}] "
                "but contains neither of its endpoints."
            )

        logger.debug(
            "Trimming interval %d [%d,%d] -> %s",
            target + 1,
            trimmed.first,
            trimmed.last,
            "dropped" if replacement is None else f"[{replacement.first},{replacement.last}]",
        )
        if replacement is None:
            del intervals[target]
        else:
            intervals[target] = replacement


def _longest(
    order: CyclicOrder,
    intervals: list[SigmaInterval],
    predicate: Callable[[SigmaInterval], bool],
) -> int:
    candidates = [j for j, iv in enumerate(intervals) if predicate(iv)]
    return max(candidates, key=lambda j: (interval_length(order, intervals[j]), -j))
