"""Small-instance corpora: every antichain up to a size, plus seeded random samples."""

from __future__ import annotations

import random
from collections.abc import Iterator

from mpm_tutte.config import get_settings
from mpm_tutte.models import SigmaIntervalSystem
from mpm_tutte.presentation.families import all_antichains, random_antichain


def exhaustive(max_n: int | None = None, *, nonempty: bool = True) -> Iterator[SigmaIntervalSystem]:
    limit = get_settings().corpus.exhaustive_max_n if max_n is None else max_n
    for n in range(1, limit + 1):
        for sys in all_antichains(n):
            if nonempty and not sys.intervals:
                continue
            yield sys


def sampled(count: int | None = None) -> Iterator[SigmaIntervalSystem]:
    corpus = get_settings().corpus
    rng = random.Random(corpus.seed)
    for _ in range(corpus.random_count if count is None else count):
        yield random_antichain(rng.randint(corpus.random_min_n, corpus.random_max_n), rng)
