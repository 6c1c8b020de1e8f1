"""σ-interval arithmetic on cyclic orders.

Intervals are endpoint pairs; membership and containment are offset arithmetic,
never materialized member sets.
"""

from __future__ import annotations

from collections.abc import Iterable

from mpm_tutte.errors import DomainError
from mpm_tutte.models import CyclicOrder, SigmaInterval


def interval_length(order: CyclicOrder, iv: SigmaInterval) -> int:
    return order.offset(iv.first, iv.last) + 1


def interval_contains(order: CyclicOrder, iv: SigmaInterval, x: int) -> bool:
    return order.offset(iv.first, x) <= order.offset(iv.first, iv.last)


def interval_is_subset(order: CyclicOrder, inner: SigmaInterval, outer: SigmaInterval) -> bool:
    """Set containment of ``inner`` in ``outer``."""
    outer_length = interval_length(order, outer)
    if outer_length == order.size:
        return True
    return order.offset(outer.first, inner.first) + interval_length(order, inner) <= outer_length


def interval_members(order: CyclicOrder, iv: SigmaInterval) -> tuple[int, ...]:
    """Members f, σ(f), ..., l in cyclic order.

    Raises:
        InvalidElementError: If an endpoint is not in the order.
    """
    start = order.position(iv.first)
    length = interval_length(order, iv)
    return tuple(order.elements[(start + j) % order.size] for j in range(length))


def induced_order(order: CyclicOrder, subset: Iterable[int]) -> CyclicOrder:
    """The cycle σ_X on ``subset``, skipping the elements outside it.

    Raises:
        DomainError: If ``subset`` is empty.
        InvalidElementError: If ``subset`` has elements outside the order.
    """
    keep = set(subset)
    if not keep:
        raise DomainError("Cannot induce a cyclic order on the empty set.")
    for element in keep:
        order.position(element)
    return CyclicOrder(tuple(e for e in order.elements if e in keep))


def split_at(
    order: CyclicOrder, iv: SigmaInterval, x: int
) -> tuple[SigmaInterval | None, SigmaInterval | None]:
    """First and last parts of ``iv - x``; a part is None when x is that endpoint.

    Raises:
        DomainError: If x is not a member of ``iv``.
    """
    if not interval_contains(order, iv, x):
        raise DomainError(f"Element {x} is not in the interval [{iv.first},{iv.last}].")
    first_part = None if x == iv.first else SigmaInterval(iv.first, order.predecessor(x))
    last_part = None if x == iv.last else SigmaInterval(order.successor(x), iv.last)
    return first_part, last_part
