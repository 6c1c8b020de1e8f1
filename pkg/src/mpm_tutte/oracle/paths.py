"""Exhaustive lattice-path enumeration inside a diagram.

Checks the b-path and Γ dynamic programs against plain enumeration of words.
"""

from __future__ import annotations

from collections.abc import Iterator
from itertools import combinations

from mpm_tutte.config import get_settings
from mpm_tutte.errors import DomainError
from mpm_tutte.models import Diagram
from mpm_tutte.oracle.bruteforce import check_guard


def region_paths(
    diagram: Diagram, d: int, y: int, end_height: int
) -> Iterator[tuple[int, ...]]:
    """Height sequences of every path from (d, y) to (m + r, end_height) inside the region."""
    steps = diagram.n - d
    rises = end_height - y
    if rises < 0 or rises > steps:
        return
    for positions in combinations(range(steps), rises):
        heights = [y]
        chosen = set(positions)
        for s in range(steps):
            heights.append(heights[-1] + (s in chosen))
        if all(diagram.in_region(d + s, h) for s, h in enumerate(heights)):
            yield tuple(heights)


def b_paths_bruteforce(diagram: Diagram) -> set[frozenset[int]]:
    """Label sets of all b-paths by enumerating every N-position choice from every start."""
    check_guard(diagram.n, get_settings().guards.label_sets_max_n, "b-path enumeration")
    found: set[frozenset[int]] = set()
    for i in range(1, diagram.k + 1):
        for heights in region_paths(diagram, 0, i - 1, i - 1 + diagram.r):
            found.add(
                frozenset(d for d in range(1, diagram.n + 1) if heights[d] > heights[d - 1])
            )
    return found


def pseudo_activities(diagram: Diagram, d: int, heights: tuple[int, ...]) -> tuple[int, int]:
    """Pseudo-internal and pseudo-external step counts of a path starting on antidiagonal d.

    A North step is pseudo-internally active when it lies in Q and the rest of the
    path after it touches P; an East step is pseudo-externally active when it lies
    in P and the rest touches Q.
    """
    internal = 0
    external = 0
    for s in range(len(heights) - 1):
        a, b = d + s, d + s + 1
        rest = [(d + t, heights[t]) for t in range(s + 1, len(heights))]
        if heights[s + 1] > heights[s]:
            if diagram.on_top(a, heights[s]) and diagram.on_top(b, heights[s + 1]):
                internal += any(diagram.on_bottom(*p) for p in rest)
        elif diagram.on_bottom(a, heights[s]) and diagram.on_bottom(b, heights[s + 1]):
            external += any(diagram.on_top(*p) for p in rest)
    return internal, external


def gamma_bruteforce(
    diagram: Diagram,
    point: tuple[int, int],
    end: int,
    internal: int,
    external: int,
    touches_bottom: bool,
    touches_top: bool,
) -> int:
    """Γ(p, p'_end, a, b, τ_P, τ_Q) by enumerating every path from ``point`` to p'_end.

    Raises:
        DomainError: If ``end`` is not in 1..k.
    """
    if not 1 <= end <= diagram.k:
        raise DomainError(f"End index {end} is outside 1..{diagram.k}.")
    check_guard(diagram.n, get_settings().guards.label_sets_max_n, "Γ enumeration")
    d, y = point
    if not diagram.in_region(d, y):
        return 0
    count = 0
    for heights in region_paths(diagram, d, y, end - 1 + diagram.r):
        points = [(d + s, h) for s, h in enumerate(heights)]
        if any(diagram.on_bottom(*p) for p in points) != touches_bottom:
            continue
        if any(diagram.on_top(*p) for p in points) != touches_top:
            continue
        if pseudo_activities(diagram, d, heights) == (internal, external):
            count += 1
    return count
