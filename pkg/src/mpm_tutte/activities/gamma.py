"""The Γ table: constrained path counts by pseudo-activities and border contact.

Γ(p, p'_j, a, b, τ_P, τ_Q) is stored per (end j, point p) as one polynomial per
flag pair, whose x^a y^b coefficient is the count. Filling runs backwards one
antidiagonal at a time from the end points.
"""

from __future__ import annotations

import logging
from collections import defaultdict
from collections.abc import Collection
from dataclasses import dataclass, field

from mpm_tutte.errors import DomainError
from mpm_tutte.models import Diagram
from mpm_tutte.tutte.polynomial import BivariatePolynomial

logger = logging.getLogger(__name__)

Flags = tuple[bool, bool]
GammaEntry = dict[Flags, BivariatePolynomial]
GammaKey = tuple[int, int, int]


@dataclass(slots=True)
class GammaTable:
    """Γ values keyed by (end index j, antidiagonal d, height y).

    Points no valid path to p'_j passes through are absent and read as zero.
    ``evaluations`` counts the polynomials produced while filling.
    """

    diagram: Diagram
    entries: dict[GammaKey, GammaEntry] = field(default_factory=dict)
    evaluations: int = 0

    def polynomials(self, end: int, point: tuple[int, int]) -> GammaEntry:
        d, y = point
        return self.entries.get((end, d, y), {})

    def value(
        self,
        point: tuple[int, int],
        end: int,
        internal: int,
        external: int,
        touches_bottom: bool,
        touches_top: bool,
    ) -> int:
        """Γ(point, p'_end, internal, external, τ_P, τ_Q); negative budgets read as 0."""
        if internal < 0 or external < 0:
            return 0
        entry = self.polynomials(end, point)
        polynomial = entry.get((touches_bottom, touches_top))
        return 0 if polynomial is None else polynomial.coefficient(internal, external)


def compute_gamma(
    diagram: Diagram, retain: Collection[GammaKey] | None = None
) -> GammaTable:
    """Fill Γ for every end point p'_j and every region point.

    With ``retain`` only those (j, d, y) entries are kept; the rest of the table
    lives one antidiagonal at a time.
    """
    table = GammaTable(diagram)
    for end in range(1, diagram.k + 1):
        _fill_for_end(diagram, end, table, retain)
    logger.debug(
        "Γ for k=%d m=%d r=%d: %d polynomials evaluated, %d entries kept",
        diagram.k,
        diagram.m,
        diagram.r,
        table.evaluations,
        len(table.entries),
    )
    return table


def _fill_for_end(
    diagram: Diagram, end: int, table: GammaTable, retain: Collection[GammaKey] | None
) -> None:
    n, lower, upper = diagram.n, diagram.lower, diagram.upper
    target = end - 1 + diagram.r
    if not diagram.in_region(n, target):
        raise DomainError(f"End point p'_{end} lies outside the region.")

    flags = (diagram.on_bottom(n, target), diagram.on_top(n, target))
    layer: dict[int, GammaEntry] = {target: {flags: BivariatePolynomial.one()}}
    _keep(table, retain, end, n, layer)
    for d in range(n - 1, -1, -1):
        below: dict[int, GammaEntry] = {}
        for y in range(lower[d], upper[d] + 1):
            entry = _combine(diagram, d, y, layer)
            if entry:
                below[y] = entry
                table.evaluations += len(entry)
        layer = below
        _keep(table, retain, end, d, layer)


def _combine(diagram: Diagram, d: int, y: int, following: dict[int, GammaEntry]) -> GammaEntry:
    on_p = diagram.on_bottom(d, y)
    on_q = diagram.on_top(d, y)
    sums: dict[Flags, BivariatePolynomial] = defaultdict(BivariatePolynomial.zero)
    for y2 in (y, y + 1):
        successor = following.get(y2)
        if not successor:
            continue
        north = y2 > y
        # a step lies in a border when both of its ends are on it
        in_q = north and on_q and diagram.on_top(d + 1, y2)
        in_p = not north and on_p and diagram.on_bottom(d + 1, y2)
        for (later_p, later_q), polynomial in successor.items():
            if in_q and later_p:
                polynomial = polynomial.times_x()
            elif in_p and later_q:
                polynomial = polynomial.times_y()
            flags = (on_p or later_p, on_q or later_q)
            sums[flags] = sums[flags] + polynomial
    return {flags: polynomial for flags, polynomial in sums.items() if not polynomial.is_zero()}


def _keep(
    table: GammaTable,
    retain: Collection[GammaKey] | None,
    end: int,
    d: int,
    layer: dict[int, GammaEntry],
) -> None:
    for y, entry in layer.items():
        key = (end, d, y)
        if retain is None or key in retain:
            table.entries[key] = entry
