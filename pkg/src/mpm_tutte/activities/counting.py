"""Bases counted by (internal, external) activity from the Γ table.

Bases containing 1 are split by the longest prefix [t] they contain and by the
start index j of their representation that touches Q. Bases avoiding 1 are the
complements of dual bases containing 1, with the two activities swapped.
"""

from __future__ import annotations

import logging
from collections import Counter

from mpm_tutte.activities.gamma import GammaKey, compute_gamma
from mpm_tutte.diagram import build_diagram, reflect_dual
from mpm_tutte.models import Diagram, SigmaIntervalSystem
from mpm_tutte.tutte.polynomial import BivariatePolynomial

logger = logging.getLogger(__name__)


def count_activity_classes(diagram: Diagram) -> dict[tuple[int, int], int]:
    """Map (i, e) to the number of bases with internal activity i and external activity e."""
    polynomial, _ = activity_polynomial(diagram)
    return polynomial.terms()


def activity_polynomial(diagram: Diagram) -> tuple[BivariatePolynomial, int]:
    """Σ x^i(B) y^e(B) over all bases, plus the number of Γ polynomials evaluated."""
    if diagram.m == 0:
        return BivariatePolynomial.monomial(diagram.r, 0), 0
    if diagram.r == 0:
        return BivariatePolynomial.monomial(0, diagram.m), 0
    with_one, work = _bases_containing_first(diagram)
    without_one, dual_work = _bases_containing_first(reflect_dual(diagram))
    return with_one + without_one.swapped(), work + dual_work


def tutte_via_activities_diagram(diagram: Diagram) -> BivariatePolynomial:
    polynomial, _ = activity_polynomial(diagram)
    return polynomial


def tutte_via_activities(sys: SigmaIntervalSystem) -> BivariatePolynomial:
    """t(M[𝓘]) as the activity generating function, loops factored out as powers of y.

    Raises:
        ValidationError: If the presentation is neither an antichain nor satisfies (C).
    """
    from mpm_tutte.tutte.engines import prepare

    loopless, loop_count = prepare(sys)
    if loopless is None:
        return BivariatePolynomial.monomial(0, loop_count)
    polynomial = tutte_via_activities_diagram(build_diagram(loopless, 1))
    return polynomial.shifted(0, loop_count)


def _bases_containing_first(diagram: Diagram) -> tuple[BivariatePolynomial, int]:
    """Activity generating function over bases that contain label 1.

    Needs m, r >= 1.
    """
    prefixes = list(_prefixes(diagram))
    retain: set[GammaKey] = {(j, t + 1, j - 1 + t) for j, t, _, _ in prefixes}
    table = compute_gamma(diagram, retain=retain)

    terms: Counter[tuple[int, int]] = Counter()
    for j, t, touches_top, step_in_bottom in prefixes:
        point = (t + 1, j - 1 + t)
        for (tau_p, tau_q), polynomial in table.polynomials(j, point).items():
            if not touches_top and not tau_q:
                continue
            if step_in_bottom and not tau_p:
                continue
            bump = 1 if step_in_bottom and tau_q else 0
            for (a, b), count in polynomial.terms().items():
                terms[(a + t, b + bump)] += count
    logger.debug("Bases containing 1 for k=%d: %d classes", diagram.k, len(terms))
    return BivariatePolynomial.from_terms(terms), table.evaluations


def _prefixes(diagram: Diagram) -> list[tuple[int, int, bool, bool]]:
    """Valid prefixes N^t E from p_j as (j, t, touches Q, last step lies in P)."""
    found: list[tuple[int, int, bool, bool]] = []
    for j in range(1, diagram.k + 1):
        touches_top = False
        for t in range(0, diagram.r + 1):
            y = j - 1 + t
            if not diagram.in_region(t, y):
                break
            touches_top = touches_top or diagram.on_top(t, y)
            if t == 0 or t + 1 > diagram.n or not diagram.in_region(t + 1, y):
                continue
            step_in_bottom = diagram.on_bottom(t, y) and diagram.on_bottom(t + 1, y)
            found.append(
                (j, t, touches_top or diagram.on_top(t + 1, y), step_in_bottom)
            )
    return found
