"""Tutte engines: computation-graph DP, activity counting, and subset expansion."""

from __future__ import annotations

import logging

from mpm_tutte.diagram import build_diagram
from mpm_tutte.errors import DomainError, ValidationError
from mpm_tutte.models import Algorithm, Diagram, SigmaIntervalSystem
from mpm_tutte.presentation import normalize_to_antichain, validate, without_loops
from mpm_tutte.tutte.base import TutteEnginePort, TutteRun
from mpm_tutte.tutte.graph import build_computation_graph, tutte_from_graph
from mpm_tutte.tutte.polynomial import BivariatePolynomial

logger = logging.getLogger(__name__)


def prepare(sys: SigmaIntervalSystem) -> tuple[SigmaIntervalSystem | None, int]:
    """Normalize to an antichain and strip loops; returns (loop-free system or None, loops).

    Raises:
        ValidationError: If the presentation is neither an antichain nor satisfies (C).
    """
    report = validate(sys)
    if not report.satisfies_c:
        raise ValidationError(
            "Presentation is neither an antichain nor satisfies condition (C)."
        )
    antichain = sys if report.is_antichain else normalize_to_antichain(sys)
    return without_loops(antichain)


class DynamicProgrammingEngine:
    """Level sweep over the computation graph of initial minors."""

    algorithm = Algorithm.DP

    def run(self, sys: SigmaIntervalSystem) -> TutteRun:
        loopless, loop_count = prepare(sys)
        if loopless is None:
            return TutteRun(BivariatePolynomial.monomial(0, loop_count), 0)
        result = self.run_diagram(build_diagram(loopless, 1))
        return TutteRun(result.polynomial.shifted(0, loop_count), result.nu)

    def run_diagram(self, diagram: Diagram) -> TutteRun:
        computation = build_computation_graph(diagram)
        return TutteRun(tutte_from_graph(computation), computation.nu)


class ActivitiesEngine:
    """Generating function of (internal, external) activities via the Γ table."""

    algorithm = Algorithm.ACTIVITIES

    def run(self, sys: SigmaIntervalSystem) -> TutteRun:
        loopless, loop_count = prepare(sys)
        if loopless is None:
            return TutteRun(BivariatePolynomial.monomial(0, loop_count), 0)
        result = self.run_diagram(build_diagram(loopless, 1))
        return TutteRun(result.polynomial.shifted(0, loop_count), result.nu)

    def run_diagram(self, diagram: Diagram) -> TutteRun:
        from mpm_tutte.activities.counting import activity_polynomial

        polynomial, evaluations = activity_polynomial(diagram)
        return TutteRun(polynomial, evaluations)


class BruteForceEngine:
    """Subset expansion on the presentation; guarded by ``bruteforce_max_n``."""

    algorithm = Algorithm.BRUTEFORCE

    def run(self, sys: SigmaIntervalSystem) -> TutteRun:
        from mpm_tutte.oracle import tutte_subset_expansion

        prepare(sys)
        return TutteRun(tutte_subset_expansion(sys), 2**sys.n)

    def run_diagram(self, diagram: Diagram) -> TutteRun:
        raise DomainError("The brute-force engine needs a presentation, not a diagram.")


_ENGINES: dict[Algorithm, type] = {
    Algorithm.DP: DynamicProgrammingEngine,
    Algorithm.ACTIVITIES: ActivitiesEngine,
    Algorithm.BRUTEFORCE: BruteForceEngine,
}


def engine_for(algorithm: Algorithm | str) -> TutteEnginePort:
    """Resolve the engine for an algorithm name.

    Raises:
        DomainError: If the name is not a known algorithm.
    """
    try:
        chosen = Algorithm(algorithm) if isinstance(algorithm, str) else algorithm
    except ValueError:
        raise DomainError(f"Unknown algorithm: {algorithm}") from None
    logger.info("Using the %s engine", chosen.value)
    return _ENGINES[chosen]()


def tutte(sys: SigmaIntervalSystem) -> BivariatePolynomial:
    """t(M[𝓘]) by the computation-graph DP on D(𝓘, 1).

    Raises:
        ValidationError: If the presentation is neither an antichain nor satisfies (C).
    """
    return DynamicProgrammingEngine().run(sys).polynomial


def tutte_of_diagram(diagram: Diagram) -> BivariatePolynomial:
    """The Tutte polynomial of the matroid whose bases are the diagram's label sets."""
    return DynamicProgrammingEngine().run_diagram(diagram).polynomial
