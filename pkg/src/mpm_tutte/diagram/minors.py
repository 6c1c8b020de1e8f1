"""Initial minors as diagrams, and the loop/isthmus test on the greatest element."""

from __future__ import annotations

from collections.abc import Iterable

from mpm_tutte.diagram.paths import word_of
from mpm_tutte.errors import DiagramError, DomainError, PreconditionError
from mpm_tutte.models import Diagram, ElementKind

EMPTY_DIAGRAM = Diagram(1, 0, 0, "", "")


def initial_minor_diagram(
    diagram: Diagram, deleted: Iterable[int], contracted: Iterable[int]
) -> Diagram | None:
    """The diagram of M[D] \\ X / Y where X ∪ Y are the last q labels.

    The forced suffix (E for X, N for Y) fixes which start points survive:
    a = max_i {N(W, i) - N(P, i)} + 1 and b = k - max_i {E(W, i) - E(Q, i)} over
    the last i steps. The new borders are the lowest path p_a -> p''_a and the
    highest path p_b -> p''_b. Returns None when the minor does not exist, that is
    when X is not coindependent or Y is not independent.

    Raises:
        PreconditionError: If X and Y overlap or do not form a suffix of 1..m+r.
    """
    x_set = frozenset(deleted)
    y_set = frozenset(contracted)
    n = diagram.n
    q = len(x_set) + len(y_set)
    if x_set & y_set or (x_set | y_set) != frozenset(range(n - q + 1, n + 1)):
        raise PreconditionError(
            f"Deleted {sorted(x_set)} and contracted {sorted(y_set)} must split "
            f"the last {q} labels of 1..{n}."
        )
    m2 = diagram.m - len(x_set)
    r2 = diagram.r - len(y_set)
    if m2 < 0 or r2 < 0:
        return None

    lower, upper = diagram.lower, diagram.upper
    low_shift = 0
    high_shift = 0
    suffix_north = 0
    for i in range(1, q + 1):
        if n - i + 1 in y_set:
            suffix_north += 1
        border_north = lower[n] - lower[n - i]
        border_east = i - (upper[n] - upper[n - i])
        low_shift = max(low_shift, suffix_north - border_north)
        high_shift = max(high_shift, (i - suffix_north) - border_east)
    a = low_shift + 1
    b = diagram.k - high_shift
    if a > b:
        return None

    t = n - q
    lowest = _lowest_path(diagram, t, a - 1, a - 1 + r2)
    highest = _highest_path(diagram, t, b - 1, b - 1 + r2)
    if lowest is None or highest is None:
        return None
    if any(low > high for low, high in zip(lowest, highest, strict=True)):
        return None
    if t == 0:
        return EMPTY_DIAGRAM
    return Diagram(b - a + 1, m2, r2, word_of(lowest), word_of(highest))


def greatest_element_minors(
    diagram: Diagram,
) -> tuple[ElementKind, Diagram | None, Diagram | None]:
    """Classify label m + r and return (kind, deletion diagram, contraction diagram).

    Raises:
        DomainError: If the diagram is empty.
    """
    n = diagram.n
    if n == 0:
        raise DomainError("The empty diagram has no greatest element.")
    deletion = initial_minor_diagram(diagram, (n,), ())
    contraction = initial_minor_diagram(diagram, (), (n,))
    if deletion is None and contraction is None:
        raise DiagramError(f"Label {n} of {diagram.key} is neither deletable nor contractible.")
    if contraction is None:
        return ElementKind.LOOP, deletion, None
    if deletion is None:
        return ElementKind.ISTHMUS, None, contraction
    return ElementKind.ORDINARY, deletion, contraction


def classify_greatest_element(diagram: Diagram) -> ElementKind:
    """loop, isthmus or ordinary for label m + r."""
    kind, _, _ = greatest_element_minors(diagram)
    return kind


def _lowest_path(diagram: Diagram, t: int, start: int, end: int) -> list[int] | None:
    lower, upper = diagram.lower, diagram.upper
    heights = [max(start, lower[d], end - t + d) for d in range(t + 1)]
    if heights[0] != start or heights[t] != end:
        return None
    if any(heights[d] > upper[d] for d in range(t + 1)):
        return None
    return heights


def _highest_path(diagram: Diagram, t: int, start: int, end: int) -> list[int] | None:
    lower, upper = diagram.lower, diagram.upper
    heights = [min(start + d, upper[d], end) for d in range(t + 1)]
    if heights[0] != start or heights[t] != end:
        return None
    if any(heights[d] < lower[d] for d in range(t + 1)):
        return None
    return heights
