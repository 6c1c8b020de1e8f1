"""Timing runs of the Tutte engines over a family of growing presentations."""

from __future__ import annotations

import logging
import time
from collections.abc import Sequence

from mpm_tutte.errors import DomainError
from mpm_tutte.models import Algorithm, BenchRow, SigmaIntervalSystem
from mpm_tutte.presentation.families import uniform, whirl
from mpm_tutte.tutte import engine_for

logger = logging.getLogger(__name__)

FAMILIES = ("whirl", "uniform")


def family_member(family: str, n: int) -> SigmaIntervalSystem:
    """The member of ``family`` on n elements (rank n / 2).

    Raises:
        DomainError: For an unknown family or an odd or too small n.
    """
    if n % 2 or n < 4:
        raise DomainError(f"Bench sizes must be even and at least 4, got {n}.")
    if family == "whirl":
        return whirl(n // 2)
    if family == "uniform":
        return uniform(n // 2, n)
    raise DomainError(f"Unknown family '{family}'; choose from {', '.join(FAMILIES)}.")


def run_bench(
    family: str, sizes: Sequence[int], algo: Algorithm | str, repeats: int = 1
) -> list[BenchRow]:
    """Best-of-``repeats`` wall time per size; a slower-than-expected drop is only logged."""
    engine = engine_for(algo)
    rows: list[BenchRow] = []
    for n in sorted(sizes):
        sys = family_member(family, n)
        best: float | None = None
        nu = 0
        for _ in range(max(repeats, 1)):
            started = time.perf_counter()
            nu = engine.run(sys).nu
            elapsed = time.perf_counter() - started
            best = elapsed if best is None else min(best, elapsed)
        row = BenchRow(n, engine.algorithm, round((best or 0.0) * 1000), nu)
        logger.info("bench %s n=%d: %d ms, nu=%d", row.algo.value, n, row.millis, nu)
        if rows and row.millis < rows[-1].millis:
            logger.warning(
                "Non-monotone timing: n=%d took %d ms after n=%d took %d ms",
                n,
                row.millis,
                rows[-1].n,
                rows[-1].millis,
            )
        rows.append(row)
    return rows


def format_rows(rows: Sequence[BenchRow]) -> str:
    lines = ["n,algo,millis,nu"]
    lines.extend(f"{row.n},{row.algo.value},{row.millis},{row.nu}" for row in rows)
    return "\n".join(lines) + "\n"
