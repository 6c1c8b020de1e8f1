"""Named presentations and generators of antichains of σ-intervals."""

from __future__ import annotations

import random
from collections.abc import Iterator

from mpm_tutte.cyclic import interval_is_subset
from mpm_tutte.errors import DomainError
from mpm_tutte.models import CyclicOrder, SigmaInterval, SigmaIntervalSystem


def whirl(r: int) -> SigmaIntervalSystem:
    """The rank-r whirl on 2r elements: intervals [2j-1, 2j+1], the last one wrapping to 1."""
    if r < 2:
        raise DomainError(f"Whirls need rank at least 2, got {r}.")
    n = 2 * r
    return SigmaIntervalSystem.from_pairs(
        n, ((2 * j - 1, (2 * j) % n + 1) for j in range(1, r + 1))
    )


def uniform(r: int, n: int) -> SigmaIntervalSystem:
    """U(r, n) presented by the intervals [j, j + n - r]."""
    if not 0 <= r <= n or n < 1:
        raise DomainError(f"U({r},{n}) is not a matroid on a nonempty ground set.")
    return SigmaIntervalSystem.from_pairs(n, ((j, j + n - r) for j in range(1, r + 1)))


def staircase() -> SigmaIntervalSystem:
    """The rank-4 lattice path matroid with intervals {1..5}, {2..7}, {5..8}, {7, 8, 9}."""
    return SigmaIntervalSystem.from_pairs(9, [(1, 5), (2, 7), (5, 8), (7, 9)])


def seven_element_pair() -> tuple[SigmaIntervalSystem, SigmaIntervalSystem]:
    """Two different minimal presentations of one rank-3 matroid on 7 elements."""
    return (
        SigmaIntervalSystem.from_pairs(7, [(5, 2), (2, 4), (4, 7)]),
        SigmaIntervalSystem.from_pairs(7, [(6, 3), (2, 4), (4, 7)]),
    )


def proper_intervals(n: int) -> list[SigmaInterval]:
    """Every σ-interval on 1..n except the whole set, by first element then length."""
    return [
        SigmaInterval(first, (first + length - 2) % n + 1)
        for first in range(1, n + 1)
        for length in range(1, n)
    ]


def all_antichains(n: int) -> Iterator[SigmaIntervalSystem]:
    """Every antichain of σ-intervals on 1..n, including the empty one and the whole set."""
    order = CyclicOrder.canonical(n)
    by_first: dict[int, list[SigmaInterval]] = {f: [] for f in range(1, n + 1)}
    for iv in proper_intervals(n):
        by_first[iv.first].append(iv)

    chosen: list[SigmaInterval] = []

    def extend(first: int) -> Iterator[SigmaIntervalSystem]:
        if first > n:
            yield SigmaIntervalSystem(n, tuple(chosen))
            return
        yield from extend(first + 1)
        for candidate in by_first[first]:
            if all(_incomparable(order, candidate, iv) for iv in chosen):
                chosen.append(candidate)
                yield from extend(first + 1)
                chosen.pop()

    yield from extend(1)
    yield SigmaIntervalSystem.from_pairs(n, [(1, n)])


def random_antichain(
    n: int, rng: random.Random, rank: int | None = None
) -> SigmaIntervalSystem:
    """A random nonempty antichain of proper σ-intervals, intervals sorted by first element."""
    if n < 2:
        return SigmaIntervalSystem.from_pairs(n, [(1, 1)])
    order = CyclicOrder.canonical(n)
    target = rank if rank is not None else rng.randint(1, n - 1)
    candidates = proper_intervals(n)
    rng.shuffle(candidates)
    chosen: list[SigmaInterval] = []
    for candidate in candidates:
        if len(chosen) == target:
            break
        if all(_incomparable(order, candidate, iv) for iv in chosen):
            chosen.append(candidate)
    chosen.sort(key=lambda iv: iv.first)
    return SigmaIntervalSystem(n, tuple(chosen))


def _incomparable(order: CyclicOrder, a: SigmaInterval, b: SigmaInterval) -> bool:
    return not interval_is_subset(order, a, b) and not interval_is_subset(order, b, a)
