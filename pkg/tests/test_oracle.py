from itertools import combinations

import pytest

from gaptile.blocks3d import axis_family, base_covering, skew_family, verify_covering
from gaptile.core import GapSequence, Tiling, gap_multiset, verify_tiling
from gaptile.oracle import (
    BUDGET_EXHAUSTED, SearchBudget, min_interval, solve_covering, solve_interval,
)


def brute_interval_tilable(gaps, n):
    """Independent existence check: try every combination of candidate parts."""
    size = gaps.set_size
    if n % size:
        return False
    candidates = [c for c in combinations(range(1, n + 1), size)
                  if tuple(sorted(b - a for a, b in zip(c, c[1:]))) == gaps.gaps]
    for chosen in combinations(candidates, n // size):
        flat = [x for part in chosen for x in part]
        if len(set(flat)) == n:
            return True
    return False


class TestSolveInterval:
    def test_unit_gaps(self):
        result = solve_interval(GapSequence.of(1, 1, 1), 4)
        assert isinstance(result, Tiling)
        assert result.parts[0].elements == (1, 2, 3, 4)

    def test_non_divisible_length(self):
        assert solve_interval(GapSequence.of(1, 1, 1), 6) is None

    def test_impossible_even_when_divisible(self):
        # a part with gaps {1,1,2} spans 5 integers, so [1,4] cannot host one
        assert solve_interval(GapSequence.of(1, 1, 2), 4) is None

    def test_found_tilings_verify(self):
        for gaps, n in [((1, 1, 2), 8), ((1, 2, 3), 24), ((2, 2), 6)]:
            g = GapSequence(gaps)
            result = solve_interval(g, n)
            if isinstance(result, Tiling):
                assert verify_tiling(result, g)
                assert all(gap_multiset(part) == g.gaps for part in result.parts)

    @pytest.mark.parametrize("gaps,n", [
        ((1, 1, 1), 8), ((1, 1, 2), 8), ((1, 1, 2), 12), ((1, 3), 6), ((2, 2), 6),
    ])
    def test_agrees_with_brute_force(self, gaps, n):
        g = GapSequence(gaps)
        result = solve_interval(g, n)
        assert result is not BUDGET_EXHAUSTED
        assert isinstance(result, Tiling) == brute_interval_tilable(g, n)

    def test_deterministic(self):
        g = GapSequence.of(1, 2, 3)
        a = solve_interval(g, 24)
        b = solve_interval(g, 24)
        assert a == b

    def test_budget_exhaustion_is_distinct(self):
        out = solve_interval(GapSequence.of(1, 2, 3), 24, SearchBudget(2))
        assert out is BUDGET_EXHAUSTED

    def test_bad_length(self):
        with pytest.raises(ValueError):
            solve_interval(GapSequence.of(1, 1, 1), 0)


class TestMinInterval:
    def test_unit_gaps(self):
        n, tiling = min_interval(GapSequence.of(1, 1, 1), 12)
        assert n == 4
        assert verify_tiling(tiling, GapSequence.of(1, 1, 1))

    def test_three_sets(self):
        n, tiling = min_interval(GapSequence.of(1, 1), 12)
        assert n == 3
        assert verify_tiling(tiling, GapSequence.of(1, 1))

    def test_none_when_span_exceeds_max(self):
        # any part with gaps {1,2,56} spans 60 integers, out of reach below n=60
        assert min_interval(GapSequence.of(1, 2, 56), 16) is None


class TestSolveCovering:
    def test_covers_catalog_shape(self):
        base = base_covering("S1")
        found = solve_covering(base.cells, base.height, base.family)
        assert found is not None and found is not BUDGET_EXHAUSTED
        assert verify_covering(found)
        assert found.cells == base.cells

    def test_skew_shape(self):
        base = base_covering("T5")
        found = solve_covering(base.cells, base.height, base.family)
        assert verify_covering(found)

    def test_none_when_cardinality_is_wrong(self):
        # 3 cells at height 1 gives 3 points, not a multiple of 4
        assert solve_covering({(1, 1), (2, 1), (3, 1)}, 1, axis_family(1)) is None

    def test_none_when_exhaustive_search_fails(self):
        # a 2x2 slab of height 1 has no e3 room and no room for e2+e1 walks
        assert solve_covering({(1, 1), (2, 1), (1, 2), (2, 2)}, 1, axis_family(1)) is None

    def test_two_member_family(self):
        cells = {(1, 1), (1, 2), (2, 1), (3, 1)}
        found = solve_covering(cells, 2, skew_family(1, 2))
        if found is not None and found is not BUDGET_EXHAUSTED:
            assert verify_covering(found)

    def test_deterministic(self):
        base = base_covering("T4")
        a = solve_covering(base.cells, base.height, base.family)
        b = solve_covering(base.cells, base.height, base.family)
        assert a == b
