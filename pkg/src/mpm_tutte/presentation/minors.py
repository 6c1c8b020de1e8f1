"""Single-element deletion and contraction of σ-interval presentations."""

from __future__ import annotations

import logging

from mpm_tutte.cyclic import interval_contains
from mpm_tutte.errors import DomainError, PreconditionError
from mpm_tutte.models import SigmaInterval, SigmaIntervalSystem
from mpm_tutte.presentation.normalize import normalize_to_antichain
from mpm_tutte.presentation.validation import is_antichain, loops

logger = logging.getLogger(__name__)


def delete_element(sys: SigmaIntervalSystem, x: int) -> SigmaIntervalSystem:
    """A presentation of M \\ x on the remaining n - 1 elements, relabelled in order.

    Raises:
        InvalidElementError: If x is not in the ground set.
        PreconditionError: If the presentation is not an antichain.
        DomainError: If x is the only element.
    """
    _check_minor_input(sys, x)
    order = sys.order
    kept: list[SigmaInterval] = []
    for iv in sys.intervals:
        if not interval_contains(order, iv, x):
            kept.append(iv)
        elif iv.first == iv.last:
            continue
        elif x == iv.first:
            kept.append(SigmaInterval(order.successor(x), iv.last))
        elif x == iv.last:
            kept.append(SigmaInterval(iv.first, order.predecessor(x)))
        else:
            kept.append(iv)
    return normalize_to_antichain(_without_element(sys, kept, x))


def contract_element(sys: SigmaIntervalSystem, x: int) -> SigmaIntervalSystem:
    """A presentation of M / x on the remaining n - 1 elements, relabelled in order.

    The intervals containing x are consecutive in Σ; pairs of Σ-neighbours among
    them merge into (I_i ∪ I_{i+1}) - x and the last one disappears.

    Raises:
        InvalidElementError: If x is not in the ground set.
        PreconditionError: If the presentation is not an antichain.
        DomainError: If x is the only element.
    """
    _check_minor_input(sys, x)
    order = sys.order
    containing = sorted(
        (j for j, iv in enumerate(sys.intervals) if interval_contains(order, iv, x)),
        key=lambda j: order.offset(x, sys.intervals[j].last),
    )
    touched = set(containing)
    others = [iv for j, iv in enumerate(sys.intervals) if j not in touched]

    merged: list[SigmaInterval] = []
    for a, b in zip(containing, containing[1:], strict=False):
        first = sys.intervals[a].first
        last = sys.intervals[b].last
        if order.offset(first, x) + order.offset(x, last) + 1 >= sys.n:
            # the union is all of S - x; anchor it at f_{I_i}
            last = order.predecessor(first)
            if last == x:
                last = order.predecessor(x)
        merged.append(SigmaInterval(first, last))

    logger.debug("Contracting %d: %d intervals contain it", x, len(containing))
    return normalize_to_antichain(_without_element(sys, merged + others, x))


def without_loops(sys: SigmaIntervalSystem) -> tuple[SigmaIntervalSystem | None, int]:
    """Delete every loop; returns None for the system when nothing but loops remains."""
    loop_set = loops(sys)
    if len(loop_set) == sys.n:
        return None, sys.n
    current = sys
    for loop in sorted(loop_set, reverse=True):
        current = _without_element(current, list(current.intervals), loop)
    return current, len(loop_set)


def reverse_orientation(sys: SigmaIntervalSystem) -> SigmaIntervalSystem:
    """The same matroid read along σ⁻¹, relabelled so σ⁻¹ becomes (1, ..., n)."""
    n = sys.n
    labels = tuple(reversed(sys.labels)) if sys.labels is not None else None
    return SigmaIntervalSystem.from_pairs(
        n, ((n + 1 - iv.last, n + 1 - iv.first) for iv in sys.intervals), labels
    )


def _check_minor_input(sys: SigmaIntervalSystem, x: int) -> None:
    sys.order.position(x)
    if sys.n == 1:
        raise DomainError("Cannot remove the only element of the ground set.")
    if not is_antichain(sys):
        raise PreconditionError("Single-element minors need an antichain presentation.")


def _without_element(
    sys: SigmaIntervalSystem, intervals: list[SigmaInterval], x: int
) -> SigmaIntervalSystem:
    """Drop x from the ground set; ``intervals`` must already avoid x."""

    def shift(e: int) -> int:
        return e - 1 if e > x else e

    labels = sys.labels or tuple(str(e) for e in range(1, sys.n + 1))
    return SigmaIntervalSystem.from_pairs(
        sys.n - 1,
        ((shift(iv.first), shift(iv.last)) for iv in intervals),
        labels[: x - 1] + labels[x:],
    )
