import pytest

from models.run import CorpusFormat
from services.corpus import extract_offset, extract_pattern, ingest, parse_payload, random_text
from utils.errors import CorpusError, EmptyProfileError, InvalidInputError
from utils.rng import SeededRng

from conftest import seq


class TestIngest:
    """Reading plain and FASTA corpora."""

    def test_plain(self, corpus_dir):
        text, alphabet = ingest(corpus_dir / "text.txt", CorpusFormat.PLAIN, "?")
        assert text.ranks.tolist() == [1, 2, 3, 1, 2]
        assert alphabet.sigma == 3

    def test_crlf_dropped(self):
        assert parse_payload(b"ab\r\ncd\r\n", CorpusFormat.PLAIN) == b"abcd"

    def test_fasta_headers_dropped(self, tmp_path):
        path = tmp_path / "reads.fa"
        path.write_bytes(b">chr1 test\nACGN\nNTGA\n>chr2\nCC\n")
        text, alphabet = ingest(path, CorpusFormat.FASTA, "N")
        assert text.length == 10
        assert text.ranks.tolist()[3:5] == [0, 0]
        assert alphabet.sigma == 4

    def test_missing_file(self, tmp_path):
        with pytest.raises(CorpusError):
            ingest(tmp_path / "absent.txt", CorpusFormat.PLAIN, "?")

    def test_empty_file(self, tmp_path):
        path = tmp_path / "empty.txt"
        path.write_bytes(b"\n\n")
        with pytest.raises(InvalidInputError):
            ingest(path, CorpusFormat.PLAIN, "?")

    def test_headers_only(self, tmp_path):
        path = tmp_path / "headers.fa"
        path.write_bytes(b">one\n>two\n")
        with pytest.raises(InvalidInputError):
            ingest(path, CorpusFormat.FASTA, "N")


class TestExtraction:
    """Random patterns cut from a text."""

    def test_whole_text(self):
        text = seq("abcab")
        assert extract_pattern(text, 5, SeededRng(4)).ranks.tolist() == text.ranks.tolist()

    def test_is_a_substring(self):
        text = seq("abcdefghij")
        for seed in range(20):
            piece = extract_pattern(text, 3, SeededRng(seed)).ranks.tolist()
            start = piece[0] - 1
            assert piece == text.ranks.tolist()[start:start + 3]

    def test_reproducible(self):
        text = seq("abcdefghij")
        a = extract_pattern(text, 4, SeededRng(17))
        b = extract_pattern(text, 4, SeededRng(17))
        assert a.ranks.tolist() == b.ranks.tolist()

    def test_offsets_are_uniform(self):
        rng = SeededRng(99)
        counts = [0] * 4
        for _ in range(4000):
            counts[extract_offset(6, 3, rng) - 1] += 1
        assert all(850 < c < 1150 for c in counts)

    def test_pattern_longer_than_text(self):
        with pytest.raises(EmptyProfileError):
            extract_pattern(seq("ab"), 3, SeededRng(0))


class TestRandomText:
    """Synthetic uniform texts."""

    def test_alphabet_range(self):
        text = random_text(500, 4, SeededRng(1))
        assert text.length == 500
        assert set(text.ranks.tolist()) == {1, 2, 3, 4}

    def test_wildcard_density(self):
        text = random_text(4000, 3, SeededRng(2), wildcard_density=0.25)
        wild = int((text.ranks == 0).sum())
        assert 850 < wild < 1150

    def test_reproducible(self):
        assert random_text(50, 20, SeededRng(5)).ranks.tolist() == random_text(50, 20, SeededRng(5)).ranks.tolist()

    def test_parameter_checks(self):
        with pytest.raises(InvalidInputError):
            random_text(0, 4, SeededRng(0))
        with pytest.raises(InvalidInputError):
            random_text(10, 4, SeededRng(0), wildcard_density=1.5)
