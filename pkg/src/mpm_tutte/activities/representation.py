"""Path representations Π(X, p_i), the basis-exchange test and basis activities."""

from __future__ import annotations

from collections.abc import Iterable

from mpm_tutte.errors import DomainError
from mpm_tutte.models import EAST, NORTH, Diagram, PathRepresentation


def represent(diagram: Diagram, subset: Iterable[int], start: int) -> PathRepresentation:
    """The path of m + r steps from p_start whose u-th step is North exactly when u is in X.

    Raises:
        DomainError: If ``start`` is outside 1..k or X leaves 1..m + r.
    """
    if not 1 <= start <= diagram.k:
        raise DomainError(f"Start index {start} is outside 1..{diagram.k}.")
    members = frozenset(subset)
    stray = [u for u in members if not 1 <= u <= diagram.n]
    if stray:
        raise DomainError(f"Labels {sorted(stray)} are outside 1..{diagram.n}.")
    word = "".join(NORTH if u in members else EAST for u in range(1, diagram.n + 1))
    heights = [start - 1]
    for step in word:
        heights.append(heights[-1] + (step == NORTH))
    valid = all(diagram.in_region(d, y) for d, y in enumerate(heights))
    return PathRepresentation(members, start, word, tuple(heights), valid)


def valid_starts(diagram: Diagram, subset: Iterable[int]) -> tuple[int, ...]:
    """Every i for which Π(X, p_i) is valid."""
    members = frozenset(subset)
    return tuple(
        i for i in range(1, diagram.k + 1) if represent(diagram, members, i).valid
    )


def touching_start(diagram: Diagram, basis: Iterable[int]) -> int:
    """The unique valid start whose representation touches Q.

    Raises:
        DomainError: If no valid representation exists, so ``basis`` is not a basis.
    """
    members = frozenset(basis)
    starts = valid_starts(diagram, members)
    if not starts or len(members) != diagram.r:
        raise DomainError(f"{sorted(members)} is not a basis of the diagram.")
    # raising the start raises the whole path, so the highest valid start is the one on Q
    chosen = starts[-1]
    representation = represent(diagram, members, chosen)
    if not _touches_top(diagram, _all_points(representation)):
        raise DomainError(f"No valid representation of {sorted(members)} touches Q.")
    return chosen


def exchange_feasible(
    diagram: Diagram, basis: Iterable[int], start: int, u: int, v: int
) -> bool:
    """Whether (B - u) ∪ v is a basis, read off the valid path Π(B, p_start).

    Raises:
        DomainError: If u is not in B, v is in B, or Π(B, p_start) is not valid.
    """
    members = frozenset(basis)
    if u not in members or v in members:
        raise DomainError(f"Exchange needs u={u} in B and v={v} outside B.")
    path = represent(diagram, members, start)
    if not path.valid:
        raise DomainError(f"Π({sorted(members)}, p_{start}) is not a valid path.")
    n = diagram.n
    if v < u:
        between = path.segment(v, u, open_start=True, open_end=True)
        if not _touches_top(diagram, between):
            return True
        before = path.segment(1, v, open_end=True)
        after = path.segment(u, n, open_start=True)
        return not _touches_bottom(diagram, before) and not _touches_bottom(diagram, after)
    between = path.segment(u, v, open_start=True, open_end=True)
    if not _touches_bottom(diagram, between):
        return True
    before = path.segment(1, u, open_end=True)
    after = path.segment(v, n, open_start=True)
    return not _touches_top(diagram, before) and not _touches_top(diagram, after)


def basis_activities(
    diagram: Diagram, basis: Iterable[int], start: int | None = None
) -> tuple[int, int]:
    """Internal and external activity of B from any one of its valid representations.

    u in B is internally active when [u] ⊆ B, or step u lies in Q and the path after
    it touches P. u outside B is externally active when [u] misses B, or step u lies
    in P and the path after it touches Q.

    Raises:
        DomainError: If B has no valid representation, or ``start`` gives an invalid one.
    """
    members = frozenset(basis)
    if start is None:
        starts = valid_starts(diagram, members)
        if not starts or len(members) != diagram.r:
            raise DomainError(f"{sorted(members)} is not a basis of the diagram.")
        start = starts[0]
    path = represent(diagram, members, start)
    if not path.valid:
        raise DomainError(f"Π({sorted(members)}, p_{start}) is not a valid path.")

    heights = path.heights
    n = diagram.n
    internal = 0
    external = 0
    prefix_inside = True
    prefix_outside = True
    for u in range(1, n + 1):
        prefix_inside = prefix_inside and u in members
        prefix_outside = prefix_outside and u not in members
        rest = path.segment(u, n, open_start=True)
        if u in members:
            on_border = diagram.on_top(u - 1, heights[u - 1]) and diagram.on_top(u, heights[u])
            if prefix_inside or (on_border and _touches_bottom(diagram, rest)):
                internal += 1
        else:
            on_border = diagram.on_bottom(u - 1, heights[u - 1]) and diagram.on_bottom(
                u, heights[u]
            )
            if prefix_outside or (on_border and _touches_top(diagram, rest)):
                external += 1
    return internal, external


def _all_points(path: PathRepresentation) -> tuple[tuple[int, int], ...]:
    return tuple(enumerate(path.heights))


def _touches_top(diagram: Diagram, points: Iterable[tuple[int, int]]) -> bool:
    return any(diagram.on_top(d, y) for d, y in points)


def _touches_bottom(diagram: Diagram, points: Iterable[tuple[int, int]]) -> bool:
    return any(diagram.on_bottom(d, y) for d, y in points)
