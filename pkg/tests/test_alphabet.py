import pytest
from hypothesis import given, strategies as st
from pydantic import ValidationError

from models.profile import EXCEEDS_K, BoundedReport, DistanceProfile
from models.sequence import Alphabet, Sequence
from services.alphabet import decode, encode
from services.naive import naive_profile
from utils.errors import EmptyProfileError, InvalidInputError

from conftest import random_instance, seq


class TestEncode:
    """Rank encoding of raw bytes."""

    def test_first_occurrence_order(self):
        sequence, alphabet = encode(b"banana", "?")
        assert sequence.ranks.tolist() == [1, 2, 3, 2, 3, 2]
        assert alphabet.byte_of == tuple(b"ban")
        assert alphabet.sigma == 3

    def test_wildcard_becomes_zero(self):
        sequence, alphabet = encode(b"ACNGTN", "N")
        assert sequence.ranks.tolist() == [1, 2, 0, 3, 4, 0]
        assert ord("N") not in alphabet.rank_of

    def test_extending_keeps_existing_ranks(self):
        text, alphabet = encode(b"abc", "?")
        pattern, extended = encode(b"cd?a", "?", alphabet)
        assert pattern.ranks.tolist() == [3, 4, 0, 1]
        assert extended.rank_of[ord("a")] == 1
        assert extended.sigma == 4

    def test_empty_input_rejected(self):
        with pytest.raises(InvalidInputError):
            encode(b"", "?")

    def test_wildcard_must_agree_with_alphabet(self):
        _, alphabet = encode(b"abc", "?")
        with pytest.raises(InvalidInputError):
            encode(b"abc", "N", alphabet)

    def test_multibyte_wildcard_rejected(self):
        with pytest.raises(InvalidInputError):
            encode(b"abc", "??")

    @given(st.binary(min_size=1, max_size=64), st.integers(0, 255))
    def test_decode_inverts_encode(self, raw, wildcard):
        sequence, alphabet = encode(raw, wildcard)
        assert decode(sequence, alphabet) == raw
        assert sequence.max_rank == alphabet.sigma

    def test_decode_rejects_unknown_rank(self):
        _, alphabet = encode(b"ab", "?")
        with pytest.raises(InvalidInputError):
            decode(Sequence(ranks=[1, 5]), alphabet)


class TestModels:
    """Validation of the core models."""

    def test_sequence_is_read_only(self):
        sequence = seq("abc")
        with pytest.raises(ValueError):
            sequence.ranks[0] = 7

    def test_negative_rank_rejected(self):
        with pytest.raises(ValidationError):
            Sequence(ranks=[1, -1])

    def test_alphabet_bijection(self):
        with pytest.raises(ValidationError):
            Alphabet(rank_of={97: 2}, byte_of=(97,), wildcard_byte=63)
        with pytest.raises(ValidationError):
            Alphabet(rank_of={63: 1}, byte_of=(63,), wildcard_byte=63)

    def test_report_rejects_out_of_range_entries(self):
        with pytest.raises(ValidationError):
            BoundedReport(k=1, positions=[1, 2], distances=[0, 2])
        with pytest.raises(ValidationError):
            BoundedReport(k=1, positions=[2, 1], distances=[0, 0])

    def test_report_helpers(self):
        report = BoundedReport(k=1, positions=[1, 2, 4], distances=[0, EXCEEDS_K, 1])
        assert report.as_dict() == {1: 0, 2: None, 4: 1}
        assert report.get(4) == 1
        assert report.get(2) is None
        assert report.accepted().tolist() == [1, 4]
        with pytest.raises(KeyError):
            report.get(3)

    def test_threshold(self):
        report = DistanceProfile(distances=[0, 3, 1]).threshold(1)
        assert report.as_dict() == {1: 0, 2: None, 3: 1}


class TestNaive:
    """The oracle itself."""

    def test_profile_of_abcab(self):
        assert naive_profile(seq("abcab"), seq("abc")).distances.tolist() == [0, 3, 3]

    def test_wildcards_match_everything(self):
        assert naive_profile(seq("axbaab"), seq("a?b")).distances.tolist() == [0, 2, 2, 0]
        assert naive_profile(seq("a?c"), seq("bb")).distances.tolist() == [1, 1]

    def test_pattern_longer_than_text(self):
        with pytest.raises(EmptyProfileError):
            naive_profile(seq("ab"), seq("abc"))

    def test_identity(self):
        text = seq("abcabcab")
        assert naive_profile(text, text).distances.tolist() == [0]

    def test_all_wildcard_pattern(self):
        assert naive_profile(seq("abcab"), seq("???")).distances.tolist() == [0, 0, 0]

    def test_distance_plus_matches(self, gen):
        # a wild card on either side counts as a match
        for _ in range(40):
            text, pattern = random_instance(gen, 60, 12, sigmas=(2, 4), wild=0.2)
            t, p = text.ranks, pattern.ranks
            m = pattern.length
            matches = [
                int(((t[i:i + m] == p) | (t[i:i + m] == 0) | (p == 0)).sum())
                for i in range(text.length - m + 1)
            ]
            distances = naive_profile(text, pattern).distances.tolist()
            assert [d + c for d, c in zip(distances, matches)] == [m] * len(matches)

    def test_against_direct_comparison(self, gen):
        for _ in range(30):
            n = int(gen.integers(1, 40))
            m = int(gen.integers(1, n + 1))
            t = gen.integers(0, 4, size=n)
            p = gen.integers(0, 4, size=m)
            expected = [
                sum(1 for j in range(m) if t[i + j] and p[j] and t[i + j] != p[j])
                for i in range(n - m + 1)
            ]
            got = naive_profile(Sequence(ranks=t), Sequence(ranks=p)).distances.tolist()
            assert got == expected
