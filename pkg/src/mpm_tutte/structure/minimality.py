"""Minimal presentations: the cocircuit certificate and a trimming search."""

from __future__ import annotations

import logging

from mpm_tutte.config import get_settings
from mpm_tutte.cyclic import interval_length, interval_members
from mpm_tutte.errors import PreconditionError
from mpm_tutte.models import SigmaInterval, SigmaIntervalSystem
from mpm_tutte.presentation import is_antichain

logger = logging.getLogger(__name__)


def interval_sizes_within_bound(sys: SigmaIntervalSystem) -> bool:
    """Every interval has at most m + 1 elements."""
    limit = sys.nullity + 1
    return all(interval_length(sys.order, iv) <= limit for iv in sys.intervals)


def verify_cocircuit_presentation(sys: SigmaIntervalSystem) -> bool:
    """True iff every interval is a cocircuit: its complement is a hyperplane.

    Raises:
        PreconditionError: If the presentation is not an antichain.
        ResourceGuardError: If n exceeds ``cocircuit_max_n``.
    """
    from mpm_tutte.oracle import check_guard, rank

    _require_antichain(sys)
    check_guard(sys.n, get_settings().guards.cocircuit_max_n, "Cocircuit check")
    ground = frozenset(range(1, sys.n + 1))
    full = rank(sys, ground)
    for index, iv in enumerate(sys.intervals):
        members = frozenset(interval_members(sys.order, iv))
        rest = ground - members
        if rank(sys, rest) != full - 1:
            logger.debug("Interval %d: complement has the wrong rank", index + 1)
            return False
        if any(rank(sys, rest | {e}) != full for e in members):
            logger.debug("Interval %d: complement is not closed", index + 1)
            return False
    return True


def is_minimal_sigma_presentation(sys: SigmaIntervalSystem) -> bool:
    """True iff no single first- or last-element trim presents the same matroid.

    Trimming only shrinks the independent sets, so if no single trim keeps the
    matroid then no sequence of trims does.

    Raises:
        PreconditionError: If the presentation is not an antichain.
        ResourceGuardError: If n exceeds ``minimality_max_n``.
    """
    from mpm_tutte.oracle import bases_bruteforce, check_guard

    _require_antichain(sys)
    check_guard(sys.n, get_settings().guards.minimality_max_n, "Minimality search")
    target = bases_bruteforce(sys)
    order = sys.order
    for index, iv in enumerate(sys.intervals):
        if iv.first == iv.last:
            continue
        for trimmed in (
            SigmaInterval(order.successor(iv.first), iv.last),
            SigmaInterval(iv.first, order.predecessor(iv.last)),
        ):
            intervals = sys.intervals[:index] + (trimmed,) + sys.intervals[index + 1 :]
            candidate = SigmaIntervalSystem(sys.n, intervals)
            if bases_bruteforce(candidate) == target:
                logger.debug("Interval %d trims to %s", index + 1, trimmed)
                return False
    return True


def _require_antichain(sys: SigmaIntervalSystem) -> None:
    if not is_antichain(sys):
        raise PreconditionError("Minimality is checked on antichain presentations.")
