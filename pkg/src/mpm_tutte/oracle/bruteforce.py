"""Exhaustive ground truth for small presentations.

Everything here enumerates subsets and is guarded by the configured size limits.
"""

from __future__ import annotations

import logging
from collections import Counter
from collections.abc import Iterable, Iterator
from itertools import combinations
from math import comb

from mpm_tutte.config import get_settings
from mpm_tutte.errors import DomainError, ResourceGuardError
from mpm_tutte.models import SetSystem, SigmaIntervalSystem
from mpm_tutte.oracle.matching import as_set_system, rank
from mpm_tutte.tutte.polynomial import BivariatePolynomial

logger = logging.getLogger(__name__)

Presentation = SigmaIntervalSystem | SetSystem


def check_guard(n: int, limit: int, what: str) -> None:
    """Raise ResourceGuardError when ``n`` exceeds ``limit``."""
    if n > limit:
        raise ResourceGuardError(f"{what} is limited to n <= {limit}; got n = {n}.")


def bases_bruteforce(sys: Presentation) -> set[frozenset[int]]:
    """All r-subsets of full rank."""
    system = as_set_system(sys)
    check_guard(system.n, get_settings().guards.bruteforce_max_n, "Basis enumeration")
    full = rank(system, range(1, system.n + 1))
    return {
        frozenset(candidate)
        for candidate in combinations(range(1, system.n + 1), full)
        if rank(system, candidate) == full
    }


def tutte_subset_expansion(sys: Presentation) -> BivariatePolynomial:
    """Σ over A ⊆ S of (x-1)^(r(S)-r(A)) (y-1)^(|A|-r(A)), exactly."""
    system = as_set_system(sys)
    check_guard(system.n, get_settings().guards.bruteforce_max_n, "Subset expansion")
    full = rank(system, range(1, system.n + 1))

    corank_nullity: Counter[tuple[int, int]] = Counter()
    for subset in _all_subsets(system.n):
        subset_rank = rank(system, subset)
        corank_nullity[(full - subset_rank, len(subset) - subset_rank)] += 1

    terms: Counter[tuple[int, int]] = Counter()
    for (a, b), count in corank_nullity.items():
        for i in range(a + 1):
            x_part = comb(a, i) * (-1) ** (a - i)
            for j in range(b + 1):
                terms[(i, j)] += count * x_part * comb(b, j) * (-1) ** (b - j)
    return BivariatePolynomial.from_terms(terms, r=full, m=system.n - full)


def activities_by_definition(
    sys: Presentation,
    basis: Iterable[int],
    bases: set[frozenset[int]] | None = None,
) -> tuple[int, int]:
    """Internal and external activity of ``basis`` under 1 < 2 < ... < n.

    u in B is internally active when no smaller v outside B gives a basis (B - u) ∪ v;
    u outside B is externally active when no smaller v in B gives a basis (B - v) ∪ u.

    Raises:
        DomainError: If ``basis`` is not a basis.
    """
    system = as_set_system(sys)
    all_bases = bases if bases is not None else bases_bruteforce(system)
    chosen = frozenset(basis)
    if chosen not in all_bases:
        raise DomainError(f"{sorted(chosen)} is not a basis.")

    internal = 0
    external = 0
    for u in range(1, system.n + 1):
        if u in chosen:
            if not any(
                (chosen - {u}) | {v} in all_bases
                for v in range(1, u)
                if v not in chosen
            ):
                internal += 1
        elif not any((chosen - {v}) | {u} in all_bases for v in chosen if v < u):
            external += 1
    return internal, external


def is_connected_bruteforce(sys: Presentation) -> bool:
    """True iff no proper nonempty X has r(X) + r(S - X) = r(S)."""
    system = as_set_system(sys)
    check_guard(system.n, get_settings().guards.connectivity_max_n, "Separator search")
    ground = frozenset(range(1, system.n + 1))
    full = rank(system, ground)
    others = sorted(ground - {1})
    for size in range(len(others)):
        for rest in combinations(others, size):
            part = frozenset((1, *rest))
            if rank(system, part) + rank(system, ground - part) == full:
                logger.debug("Separator found: %s", sorted(part))
                return False
    return True


def independent_sets_count(sys: Presentation) -> int:
    system = as_set_system(sys)
    check_guard(system.n, get_settings().guards.bruteforce_max_n, "Independent-set count")
    return sum(1 for subset in _all_subsets(system.n) if rank(system, subset) == len(subset))


def spanning_sets_count(sys: Presentation) -> int:
    system = as_set_system(sys)
    check_guard(system.n, get_settings().guards.bruteforce_max_n, "Spanning-set count")
    full = rank(system, range(1, system.n + 1))
    return sum(1 for subset in _all_subsets(system.n) if rank(system, subset) == full)


def is_spanning(sys: Presentation, subset: Iterable[int]) -> bool:
    system = as_set_system(sys)
    return rank(system, subset) == rank(system, range(1, system.n + 1))


def is_circuit(sys: Presentation, subset: Iterable[int]) -> bool:
    """Dependent, with every single-element deletion independent."""
    system = as_set_system(sys)
    circuit = frozenset(subset)
    if not circuit or rank(system, circuit) != len(circuit) - 1:
        return False
    return all(rank(system, circuit - {e}) == len(circuit) - 1 for e in circuit)


def _all_subsets(n: int) -> Iterator[tuple[int, ...]]:
    elements = range(1, n + 1)
    for size in range(n + 1):
        yield from combinations(elements, size)
