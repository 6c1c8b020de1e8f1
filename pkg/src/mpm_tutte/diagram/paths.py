"""b-paths of a diagram: label sets, fast basis counting, and border symmetries."""

from __future__ import annotations

from collections import defaultdict

from mpm_tutte.config import get_settings
from mpm_tutte.errors import ResourceGuardError
from mpm_tutte.models import EAST, NORTH, Diagram

_SWAP = str.maketrans({EAST: NORTH, NORTH: EAST})


def word_of(heights: tuple[int, ...] | list[int]) -> str:
    return "".join(
        NORTH if heights[d + 1] > heights[d] else EAST for d in range(len(heights) - 1)
    )


def path_is_valid(diagram: Diagram, heights: tuple[int, ...] | list[int]) -> bool:
    return len(heights) == diagram.n + 1 and all(
        diagram.lower[d] <= y <= diagram.upper[d] for d, y in enumerate(heights)
    )


def label_sets(diagram: Diagram) -> set[frozenset[int]]:
    """N-step label sets of every b-path (p_i to p'_i inside the region).

    Raises:
        ResourceGuardError: If m + r exceeds the enumeration guard.
    """
    limit = get_settings().guards.label_sets_max_n
    if diagram.n > limit:
        raise ResourceGuardError(f"Label-set enumeration is limited to n <= {limit}.")
    n, lower, upper = diagram.n, diagram.lower, diagram.upper
    found: set[frozenset[int]] = set()
    for i in range(1, diagram.k + 1):
        target = i - 1 + diagram.r
        stack: list[tuple[int, int, tuple[int, ...]]] = [(0, i - 1, ())]
        while stack:
            d, y, norths = stack.pop()
            if d == n:
                found.add(frozenset(norths))
                continue
            remaining = n - d - 1
            for rise in (0, 1):
                y2 = y + rise
                if lower[d + 1] <= y2 <= upper[d + 1] and 0 <= target - y2 <= remaining:
                    stack.append((d + 1, y2, (*norths, d + 1) if rise else norths))
    return found


def count_bases(diagram: Diagram) -> int:
    """|label_sets(diagram)| without enumeration.

    Each basis has exactly one valid representation touching Q, so this counts
    b-paths that touch Q, summed over start points.
    """
    n, lower, upper = diagram.n, diagram.lower, diagram.upper
    total = 0
    for i in range(1, diagram.k + 1):
        target = i - 1 + diagram.r
        layer: dict[tuple[int, bool], int] = {(i - 1, i - 1 == upper[0]): 1}
        for d in range(n):
            remaining = n - d - 1
            following: dict[tuple[int, bool], int] = defaultdict(int)
            for (y, touched), count in layer.items():
                for y2 in (y, y + 1):
                    if lower[d + 1] <= y2 <= upper[d + 1] and 0 <= target - y2 <= remaining:
                        following[(y2, touched or y2 == upper[d + 1])] += count
            layer = following
        total += layer.get((target, True), 0)
    return total


def reflect_dual(diagram: Diagram) -> Diagram:
    """Reflection in y = x: E and N swap and the borders trade places."""
    return Diagram(
        diagram.k,
        diagram.r,
        diagram.m,
        diagram.q_word.translate(_SWAP),
        diagram.p_word.translate(_SWAP),
    )


def rotate_half_turn(diagram: Diagram) -> Diagram:
    """The 180° rotation; label j becomes m + r + 1 - j."""
    return Diagram(
        diagram.k, diagram.m, diagram.r, diagram.q_word[::-1], diagram.p_word[::-1]
    )


def initial_minor_bound(diagram: Diagram) -> int:
    """(n + 1)(min(r, m) + 1)(k² + k) / 2 distinct initial-minor diagrams at most."""
    k = diagram.k
    return (diagram.n + 1) * (min(diagram.r, diagram.m) + 1) * (k * k + k) // 2
