"""Spanning circuits through the first elements of the intervals."""

from __future__ import annotations

import logging

from mpm_tutte.errors import NotApplicableError, PreconditionError
from mpm_tutte.models import SigmaIntervalSystem
from mpm_tutte.presentation import is_antichain, validate

logger = logging.getLogger(__name__)


def fundamental_set(sys: SigmaIntervalSystem) -> frozenset[int]:
    """F = {f_I : I in 𝓘}, a basis of every multi-path matroid."""
    return frozenset(iv.first for iv in sys.intervals)


def spanning_circuit(sys: SigmaIntervalSystem, x: int) -> frozenset[int]:
    """F ∪ {x}, checked to be a circuit of full rank.

    Raises:
        InvalidElementError: If x is not in the ground set.
        PreconditionError: If the presentation is not an antichain, or x is in F.
        NotApplicableError: If the matroid is recognised as a lattice path matroid,
            or F ∪ {x} fails the rank check.
    """
    from mpm_tutte.oracle import is_circuit, is_spanning

    sys.order.position(x)
    if not is_antichain(sys):
        raise PreconditionError("Spanning circuits are read off antichain presentations.")
    if validate(sys).is_lattice_path:
        raise NotApplicableError("Lattice path matroids need not have spanning circuits.")
    fundamental = fundamental_set(sys)
    if x in fundamental:
        raise PreconditionError(f"Element {x} is a first element; pick one outside F.")

    circuit = fundamental | {x}
    if not (is_circuit(sys, circuit) and is_spanning(sys, circuit)):
        raise NotApplicableError(f"{sorted(circuit)} is not a spanning circuit.")
    logger.debug("Spanning circuit through %d: %s", x, sorted(circuit))
    return circuit
