"""Structural checks on σ-interval presentations and the induced interval cycle Σ."""

from __future__ import annotations

from mpm_tutte.cyclic import interval_contains, interval_is_subset
from mpm_tutte.errors import PreconditionError
from mpm_tutte.models import SigmaIntervalSystem, ValidationReport


def containment_pairs(sys: SigmaIntervalSystem) -> list[tuple[int, int]]:
    """Index pairs (i, j), i != j, with interval i contained in interval j."""
    order = sys.order
    return [
        (i, j)
        for i, inner in enumerate(sys.intervals)
        for j, outer in enumerate(sys.intervals)
        if i != j and interval_is_subset(order, inner, outer)
    ]


def is_antichain(sys: SigmaIntervalSystem) -> bool:
    return not containment_pairs(sys)


def satisfies_condition_c(sys: SigmaIntervalSystem) -> bool:
    """Whenever I ⊆ J, the first or the last element of J lies in I."""
    order = sys.order
    for i, j in containment_pairs(sys):
        inner, outer = sys.intervals[i], sys.intervals[j]
        if not (
            interval_contains(order, inner, outer.first)
            or interval_contains(order, inner, outer.last)
        ):
            return False
    return True


def loops(sys: SigmaIntervalSystem) -> frozenset[int]:
    """Elements lying in no interval."""
    order = sys.order
    return frozenset(
        e
        for e in range(1, sys.n + 1)
        if not any(interval_contains(order, iv, e) for iv in sys.intervals)
    )


def induced_interval_cycle(sys: SigmaIntervalSystem) -> tuple[int, ...]:
    """The cycle Σ on interval indices, listed from index 0.

    Σ steps from interval j to the interval whose last element follows l_j in the
    cycle induced on the last elements.

    Raises:
        PreconditionError: If the presentation is not an antichain.
    """
    if not is_antichain(sys):
        raise PreconditionError("The interval cycle is only defined for antichains.")
    if not sys.intervals:
        return ()
    ranked = sorted(range(sys.rank), key=lambda j: sys.intervals[j].last)
    start = ranked.index(0)
    return tuple(ranked[start:] + ranked[:start])


def sigma_predecessors(sys: SigmaIntervalSystem) -> dict[int, int]:
    """Map each interval index j to the index of Σ⁻¹(I_j)."""
    cycle = induced_interval_cycle(sys)
    return {cycle[j]: cycle[j - 1] for j in range(len(cycle))}


def validate(sys: SigmaIntervalSystem) -> ValidationReport:
    """Report antichain, condition (C), loops and the lattice-path criterion.

    The lattice-path flag is the sufficient criterion: a loop, rank at most one,
    nullity zero (the free matroid), or a first element f_I outside Σ⁻¹(I). For
    presentations that satisfy (C) without being antichains it is evaluated on the
    normalized antichain.
    """
    antichain = is_antichain(sys)
    condition_c = antichain or satisfies_condition_c(sys)
    loop_set = loops(sys)

    if loop_set or sys.rank <= 1 or sys.nullity == 0:
        lattice_path = True
    elif antichain:
        lattice_path = _first_element_escapes(sys)
    elif condition_c:
        from mpm_tutte.presentation.normalize import normalize_to_antichain

        reduced = normalize_to_antichain(sys)
        lattice_path = reduced.rank <= 1 or bool(loops(reduced)) or _first_element_escapes(reduced)
    else:
        lattice_path = False

    return ValidationReport(
        is_antichain=antichain,
        satisfies_c=condition_c,
        loops=loop_set,
        is_lattice_path=lattice_path,
    )


def _first_element_escapes(sys: SigmaIntervalSystem) -> bool:
    order = sys.order
    previous = sigma_predecessors(sys)
    return any(
        not interval_contains(order, sys.intervals[previous[j]], iv.first)
        for j, iv in enumerate(sys.intervals)
    )
