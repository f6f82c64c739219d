import numpy as np
import pytest

from models.counting import PositionTable, WorkCounters
from services.convolution import indicator_correlate
from services.exact import abrahamson_profile, frequent_set_size, mark, wildcard_profile
from services.naive import naive_profile
from utils.errors import InvalidInputError

from conftest import random_instance, seq


def restricted(pattern, ranks):
    table = PositionTable.build(pattern)
    return table.restricted({rank: table.freq(rank) for rank in ranks})


class TestPositionTable:
    """Per-symbol position lists and frequencies."""

    def test_build(self):
        table = PositionTable.build(seq("ab?ba"))
        assert table.pos == {1: (1, 5), 2: (2, 4)}
        assert table.g == 4
        assert table.by_frequency() == [1, 2]

    def test_restricted_truncates(self):
        table = PositionTable.build(seq("aaab"))
        assert table.restricted({1: 2, 2: 0}).pos == {1: (1, 2)}


class TestMark:
    """Marking a text with a subset of the pattern alphabet."""

    def test_single_character(self):
        assert mark(seq("aba"), restricted(seq("ab"), [1])).marks.tolist() == [1, 0, 1]

    def test_empty_character_set(self):
        assert mark(seq("aba"), restricted(seq("ab"), [])).marks.tolist() == [0, 0, 0]

    def test_two_characters(self):
        assert mark(seq("aabb"), restricted(seq("ab"), [1, 2])).marks.tolist() == [1, 2, 1, 0]

    def test_agrees_with_indicator_correlations(self, gen):
        for _ in range(50):
            text, pattern = random_instance(gen, 200, 30, sigmas=(2, 4, 20))
            ranks = [r for r in PositionTable.build(pattern).ranks if gen.random() < 0.5]
            counters = WorkCounters()
            marks = mark(text, restricted(pattern, ranks), counters).alignments(text.length - pattern.length + 1)
            expected = sum(
                (indicator_correlate(text, pattern, r) for r in ranks),
                np.zeros(text.length - pattern.length + 1, dtype=np.int64),
            )
            assert np.array_equal(marks, expected)
            most = max((PositionTable.build(pattern).freq(r) for r in ranks), default=0)
            assert counters.marks_created <= text.length * most


class TestProfiles:
    """Abrahamson and wild-card profiles against the naive oracle."""

    def test_frequent_set_size(self):
        assert frequent_set_size(1, 1, 1) == 1
        assert frequent_set_size(64, 64, 100) == 4
        assert frequent_set_size(64, 64, 2) == 2

    def test_abrahamson_example(self):
        assert abrahamson_profile(seq("abab"), seq("ab")).distances.tolist() == [0, 2, 0]

    def test_abrahamson_identity(self):
        text = seq("abcdabca")
        assert abrahamson_profile(text, text).distances.tolist() == [0]

    def test_abrahamson_rejects_wildcards(self):
        with pytest.raises(InvalidInputError):
            abrahamson_profile(seq("a?b"), seq("ab"))

    def test_wildcard_example(self):
        assert wildcard_profile(seq("axbaab"), seq("a?b")).distances.tolist() == [0, 2, 2, 0]

    def test_all_wildcard_pattern(self):
        assert wildcard_profile(seq("abcab"), seq("???")).distances.tolist() == [0, 0, 0]

    def test_abrahamson_sweep(self, gen):
        for _ in range(200):
            text, pattern = random_instance(gen, 500, 50, sigmas=(2, 4, 20))
            assert np.array_equal(abrahamson_profile(text, pattern).distances, naive_profile(text, pattern).distances)

    def test_wildcard_sweep(self, gen):
        for _ in range(200):
            text, pattern = random_instance(gen, 500, 50, sigmas=(2, 4, 20), wild=0.1)
            assert np.array_equal(wildcard_profile(text, pattern).distances, naive_profile(text, pattern).distances)

    def test_transform_path(self, gen):
        for _ in range(5):
            text, pattern = random_instance(gen, 3000, 300, sigmas=(4, 26), wild=0.1, min_m=100)
            assert np.array_equal(wildcard_profile(text, pattern).distances, naive_profile(text, pattern).distances)


@pytest.mark.slow
class TestOracleEquivalence:
    """Full-range sweep of the exact profiles."""

    def test_abrahamson(self, gen):
        for _ in range(500):
            text, pattern = random_instance(gen, 2000, 200, min_m=2, min_n=50)
            assert np.array_equal(abrahamson_profile(text, pattern).distances, naive_profile(text, pattern).distances)

    @pytest.mark.parametrize("wild", [0.0, 0.1])
    def test_wildcard(self, gen, wild):
        for _ in range(500):
            text, pattern = random_instance(gen, 2000, 200, wild=wild, min_m=2, min_n=50)
            assert np.array_equal(wildcard_profile(text, pattern).distances, naive_profile(text, pattern).distances)
