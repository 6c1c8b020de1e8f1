"""Property tests on random antichains against the brute-force oracle."""

from __future__ import annotations

import random

from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from mpm_tutte.activities import tutte_via_activities
from mpm_tutte.diagram import build_diagram, count_bases, reflect_dual, rotate_half_turn
from mpm_tutte.models import SigmaIntervalSystem
from mpm_tutte.oracle import bases_bruteforce, tutte_subset_expansion
from mpm_tutte.presentation import reverse_orientation
from mpm_tutte.presentation.families import random_antichain
from mpm_tutte.tutte import tutte, tutte_of_diagram

PROPERTY_SETTINGS = settings(
    max_examples=40,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.function_scoped_fixture],
)


@st.composite
def antichains(draw: st.DrawFn, max_n: int = 8) -> SigmaIntervalSystem:
    n = draw(st.integers(min_value=2, max_value=max_n))
    rank = draw(st.integers(min_value=1, max_value=n - 1))
    seed = draw(st.integers(min_value=0, max_value=2**32 - 1))
    return random_antichain(n, random.Random(seed), rank)


class TestTutteProperties:
    @PROPERTY_SETTINGS
    @given(antichains())
    def test_dp_matches_subset_expansion(self, sys: SigmaIntervalSystem) -> None:
        assert tutte(sys) == tutte_subset_expansion(sys)

    @PROPERTY_SETTINGS
    @given(antichains())
    def test_activities_match_dp(self, sys: SigmaIntervalSystem) -> None:
        assert tutte_via_activities(sys) == tutte(sys)

    @PROPERTY_SETTINGS
    @given(antichains())
    def test_value_at_one_one_counts_bases(self, sys: SigmaIntervalSystem) -> None:
        assert tutte(sys).evaluate(1, 1) == len(bases_bruteforce(sys))

    @PROPERTY_SETTINGS
    @given(antichains())
    def test_orientation_does_not_matter(self, sys: SigmaIntervalSystem) -> None:
        assert tutte(reverse_orientation(sys)) == tutte(sys)


class TestDiagramProperties:
    @PROPERTY_SETTINGS
    @given(antichains(), st.data())
    def test_every_anchor_counts_the_bases(
        self, sys: SigmaIntervalSystem, data: st.DataObject
    ) -> None:
        x = data.draw(st.integers(min_value=1, max_value=sys.n))
        assert count_bases(build_diagram(sys, x)) == len(bases_bruteforce(sys))

    @PROPERTY_SETTINGS
    @given(antichains())
    def test_symmetries(self, sys: SigmaIntervalSystem) -> None:
        diagram = build_diagram(sys, 1)
        t = tutte_of_diagram(diagram)
        assert tutte_of_diagram(reflect_dual(diagram)) == t.swapped()
        assert tutte_of_diagram(rotate_half_turn(diagram)) == t
