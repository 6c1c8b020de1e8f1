"""Tests for engine timing runs."""

from __future__ import annotations

import logging
import math

import pytest

from mpm_tutte.cli.bench import family_member, format_rows, run_bench
from mpm_tutte.config import get_settings
from mpm_tutte.errors import DomainError
from mpm_tutte.models import Algorithm, BenchRow
from mpm_tutte.presentation.families import uniform, whirl

LARGEST_RUN_MILLIS = 5 * 60 * 1000


def _slope(xs: list[int], ys: list[int]) -> float:
    """Least-squares slope of log y against log x."""
    lx = [math.log(x) for x in xs]
    ly = [math.log(max(y, 1)) for y in ys]
    mx, my = sum(lx) / len(lx), sum(ly) / len(ly)
    num = sum((a - mx) * (b - my) for a, b in zip(lx, ly, strict=True))
    return num / sum((a - mx) ** 2 for a in lx)


class TestFamilyMember:
    def test_whirl(self) -> None:
        assert family_member("whirl", 8) == whirl(4)

    def test_uniform(self) -> None:
        assert family_member("uniform", 6) == uniform(3, 6)

    @pytest.mark.parametrize("n", [3, 2, 7])
    def test_bad_sizes(self, n: int) -> None:
        with pytest.raises(DomainError):
            family_member("whirl", n)

    def test_unknown_family(self) -> None:
        with pytest.raises(DomainError, match="Unknown family"):
            family_member("wheel", 6)


class TestRunBench:
    def test_rows_in_size_order(self) -> None:
        rows = run_bench("whirl", [6, 4], Algorithm.DP)
        assert [row.n for row in rows] == [4, 6]
        assert all(row.algo is Algorithm.DP for row in rows)
        assert all(row.millis >= 0 for row in rows)

    def test_dp_work_grows(self) -> None:
        small, large = run_bench("uniform", [4, 8], "dp")
        assert small.nu < large.nu

    def test_repeats(self, caplog: pytest.LogCaptureFixture) -> None:
        with caplog.at_level(logging.INFO, logger="mpm_tutte.cli.bench"):
            rows = run_bench("whirl", [4], "activities", repeats=3)
        assert len(rows) == 1
        assert "bench activities n=4" in caplog.text


class TestFormatRows:
    def test_csv(self) -> None:
        rows = [BenchRow(20, Algorithm.DP, 3, 120), BenchRow(40, Algorithm.DP, 11, 480)]
        assert format_rows(rows) == "n,algo,millis,nu\n20,dp,3,120\n40,dp,11,480\n"

    def test_no_rows(self) -> None:
        assert format_rows([]) == "n,algo,millis,nu\n"


@pytest.mark.slow
class TestScaling:
    def test_dp_work_is_polynomial(self) -> None:
        rows = run_bench("whirl", get_settings().bench.sizes, "dp")
        sizes = [row.n for row in rows]
        assert sizes == [20, 40, 80, 160]
        assert _slope(sizes, [row.nu for row in rows]) <= 6.5
        assert _slope(sizes, [row.millis for row in rows]) <= 6.5
        assert rows[-1].millis < LARGEST_RUN_MILLIS

    def test_activities_work_is_polynomial(self) -> None:
        rows = run_bench("whirl", get_settings().bench.sizes, "activities")
        assert rows[-1].n == 160
        assert _slope([row.n for row in rows], [row.millis for row in rows]) <= 5.5
        assert rows[-1].millis < LARGEST_RUN_MILLIS
