"""Diagrams D(𝓘, x) read off a presentation, and the extension of a general diagram."""

from __future__ import annotations

from mpm_tutte.cyclic import interval_contains
from mpm_tutte.errors import DomainError, PreconditionError
from mpm_tutte.models import (
    EAST,
    NORTH,
    Diagram,
    SigmaInterval,
    SigmaIntervalSystem,
)
from mpm_tutte.presentation.validation import induced_interval_cycle, is_antichain


def anchored_elements(n: int, x: int) -> tuple[int, ...]:
    """Element carried by each diagram label: label j (index j - 1) is σ^(j-1)(x)."""
    return tuple((x - 1 + j) % n + 1 for j in range(n))


def diagram_row_order(sys: SigmaIntervalSystem, x: int) -> tuple[int, ...]:
    """Interval indices I_1, ..., I_r in the order used to draw D(𝓘, x).

    Σ is rotated so the intervals containing x other than at their first element
    come first. With none of those, I_1 minimizes |[x, f_I]|; with all of them,
    I_1 minimizes |[x, l_I]|.
    """
    order = sys.order
    cycle = list(induced_interval_cycle(sys))
    straddling = {
        j
        for j, iv in enumerate(sys.intervals)
        if interval_contains(order, iv, x) and iv.first != x
    }
    if not straddling:
        lead = min(cycle, key=lambda j: order.offset(x, sys.intervals[j].first))
    elif len(straddling) == len(cycle):
        lead = min(cycle, key=lambda j: order.offset(x, sys.intervals[j].last))
    else:
        lead = next(
            j for pos, j in enumerate(cycle) if j in straddling and cycle[pos - 1] not in straddling
        )
    start = cycle.index(lead)
    return tuple(cycle[start:] + cycle[:start])


def build_diagram(sys: SigmaIntervalSystem, x: int) -> Diagram:
    """D(𝓘, x): labels run x, σ(x), ..., σ⁻¹(x); P steps North at last elements, Q at first.

    Raises:
        InvalidElementError: If x is not in the ground set.
        DomainError: If the presentation has no intervals.
        PreconditionError: If the presentation is not an antichain.
    """
    order = sys.order
    order.position(x)
    if not sys.intervals:
        raise DomainError("A diagram needs at least one interval.")
    if not is_antichain(sys):
        raise PreconditionError("Diagrams are built from antichain presentations.")

    k = 1 + sum(
        1 for iv in sys.intervals if interval_contains(order, iv, x) and iv.first != x
    )
    lasts = {iv.last for iv in sys.intervals}
    firsts = {iv.first for iv in sys.intervals}
    elements = anchored_elements(sys.n, x)
    p_word = "".join(NORTH if e in lasts else EAST for e in elements)
    q_word = "".join(NORTH if e in firsts else EAST for e in elements)
    return Diagram(k, sys.n - sys.rank, sys.rank, p_word, q_word)


def lattice_path_diagram(p_word: str, q_word: str) -> Diagram:
    """The k = 1 diagram of the lattice path matroid bounded by P below and Q above."""
    return Diagram.from_words(1, p_word, q_word)


def extend(diagram: Diagram) -> tuple[Diagram, frozenset[int], SigmaIntervalSystem]:
    """An antichain presentation whose contraction by Z has the bases of ``diagram``.

    The extension appends k + 1 North steps to both borders; Z holds the k + 1
    new labels. Rows j < k are joined with rows r + k + j + 1 into one wrapping
    interval; the other rows give one interval each.
    """
    k, m, r = diagram.k, diagram.m, diagram.r
    tail = NORTH * (k + 1)
    extended = Diagram(k, m, r + k + 1, diagram.p_word + tail, diagram.q_word + tail)
    n = extended.n
    contracted = frozenset(range(m + r + 1, n + 1))

    rows = {j: _row_labels(extended, j) for j in range(1, extended.r + k)}
    intervals = [
        SigmaInterval(rows[r + k + j + 1][0], rows[j][1]) for j in range(1, k)
    ]
    intervals.extend(SigmaInterval(*rows[j]) for j in range(k, extended.r + 1))
    presentation = SigmaIntervalSystem(n, tuple(intervals))
    return extended, contracted, presentation


def _row_labels(diagram: Diagram, row: int) -> tuple[int, int]:
    """Smallest and largest label of a North step from height row - 1 to height row."""
    labels = [
        d + 1
        for d in range(diagram.n)
        if diagram.in_region(d, row - 1) and diagram.in_region(d + 1, row)
    ]
    if not labels:
        raise DomainError(f"Row {row} of the diagram has no North step.")
    return labels[0], labels[-1]
