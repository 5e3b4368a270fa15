import pytest
from hypothesis import given, strategies as st

from gaptile.core import (
    GapSequence, Part, Tiling, Verdict, gap_multiset,
    tiling_from_json, tiling_to_json, verify_tiling,
)


def triple(*gaps):
    return GapSequence(tuple(gaps))


def parts(*element_lists):
    return tuple(Part(tuple(xs)) for xs in element_lists)


class TestGapSequence:
    def test_normalizes_sorted(self):
        assert GapSequence.of(3, 1, 2).gaps == (1, 2, 3)

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            GapSequence.of(1, 0, 2)
        with pytest.raises(ValueError):
            GapSequence(())

    def test_sizes(self):
        g = GapSequence.of(1, 2, 3)
        assert g.set_size == 4
        assert g.span == 6


class TestGapMultiset:
    def test_cumulative_offsets(self):
        # {0, p, p+q, p+q+r} must give back {p, q, r}
        for p, q, r in [(1, 2, 3), (2, 2, 5), (4, 1, 1)]:
            part = Part.from_values([0, p, p + q, p + q + r])
            assert gap_multiset(part) == tuple(sorted((p, q, r)))

    def test_examples(self):
        assert gap_multiset(Part((1, 2, 4, 7))) == (1, 2, 3)
        assert gap_multiset(Part((3, 5, 6))) == (1, 2)

    def test_short_part_rejected(self):
        with pytest.raises(ValueError):
            gap_multiset(Part((5,)))

    def test_part_must_increase(self):
        with pytest.raises(ValueError):
            Part((1, 1, 2, 3))
        with pytest.raises(ValueError):
            Part.from_values([4, 4, 5, 6])


class TestVerifyTiling:
    def test_accepts_single_consecutive_part(self):
        t = Tiling(1, 4, parts([1, 2, 3, 4]))
        assert verify_tiling(t, triple(1, 1, 1))

    def test_rejects_hole(self):
        t = Tiling(1, 4, parts([1, 2, 3, 5]))
        v = verify_tiling(t, triple(1, 1, 1))
        assert not v
        assert v.reason == "coverage"
        # 4 is missing and 5 is stray; the smallest mismatch is the witness
        assert v.witness == 4

    def test_rejects_wrong_gap_multiset(self):
        t = Tiling(1, 8, parts([1, 2, 4, 5], [3, 6, 7, 8]))
        v = verify_tiling(t, triple(1, 1, 2))
        assert not v
        assert v.reason == "gaps"
        assert v.witness == 3  # {3,6,7,8} has gaps {3,1,1}

    def test_rejects_overlap_before_coverage(self):
        # candidate violating both disjointness and coverage: fixed check order
        t = Tiling(1, 8, parts([1, 2, 3, 4], [4, 5, 6, 7]))
        v = verify_tiling(t, triple(1, 1, 1))
        assert v.reason == "disjointness"
        assert v.witness == 4

    def test_accepting_tiling_has_consistent_counts(self):
        t = Tiling(1, 8, parts([1, 2, 3, 4], [5, 6, 7, 8]))
        assert verify_tiling(t, triple(1, 1, 1))
        assert sum(len(p.elements) for p in t.parts) == t.length
        assert len(t.parts) * 4 == t.length

    def test_verifier_is_pure(self):
        t = Tiling(1, 4, parts([1, 2, 3, 4]))
        g = triple(1, 1, 1)
        assert verify_tiling(t, g) == verify_tiling(t, g)

    @given(st.lists(st.integers(-50, 50), min_size=4, max_size=4, unique=True),
           st.tuples(st.integers(1, 6), st.integers(1, 6), st.integers(1, 6)))
    def test_singleton_acceptance_characterized(self, raw, gaps):
        # one part tiles [min, max] iff it is 4 consecutive integers whose
        # differences match the prescribed multiset
        part = Part.from_values(raw)
        t = Tiling(part.elements[0], part.elements[-1], (part,))
        g = GapSequence(gaps)
        expected = (gap_multiset(part) == g.gaps
                    and part.elements[-1] - part.elements[0] == 3)
        assert bool(verify_tiling(t, g)) == expected

    def test_verdict_is_falsy_with_message(self):
        v = Verdict(False, "coverage", 7)
        assert not v
        assert "coverage" in v.message() and "7" in v.message()


class TestJson:
    def test_round_trip_sorts_parts(self):
        t = Tiling(1, 8, parts([5, 6, 7, 8], [1, 2, 3, 4]))
        g = triple(1, 1, 1)
        obj = tiling_to_json(t, g)
        assert obj["parts"] == [[1, 2, 3, 4], [5, 6, 7, 8]]
        assert obj["interval"] == [1, 8]
        g2, t2 = tiling_from_json(obj)
        assert g2 == g
        assert verify_tiling(t2, g2)

    def test_malformed_raises_value_error(self):
        with pytest.raises(ValueError):
            tiling_from_json({"gaps": [1, 1, 1], "interval": [1, 4]})
        with pytest.raises(ValueError):
            tiling_from_json({"gaps": [1, "x"], "interval": [1, 4], "parts": []})
        with pytest.raises(ValueError):
            tiling_from_json([1, 2, 3])
