import numpy as np
import pytest

from models.sequence import Sequence


def seq(letters: str) -> Sequence:
    """'a' -> 1, 'b' -> 2, ...; '?' is the wild card."""
    return Sequence(ranks=[0 if c == "?" else ord(c) - ord("a") + 1 for c in letters])


def random_sequence(gen: np.random.Generator, length: int, sigma: int, wild: float = 0.0) -> Sequence:
    ranks = gen.integers(1, sigma + 1, size=length)
    if wild:
        ranks[gen.random(length) < wild] = 0
    return Sequence(ranks=ranks)


def random_instance(
    gen: np.random.Generator,
    max_n: int,
    max_m: int,
    sigmas=(2, 4, 20, 26),
    wild: float = 0.0,
    min_m: int = 1,
    min_n: int = 1,
) -> tuple[Sequence, Sequence]:
    """Random text and pattern; half of the patterns are cut from the text so matches occur."""
    sigma = int(gen.choice(sigmas))
    m = int(gen.integers(min_m, max_m + 1))
    n = int(gen.integers(max(m, min_n), max(m, max_n) + 1))
    text = random_sequence(gen, n, sigma, wild)
    if gen.random() < 0.5:
        start = int(gen.integers(0, n - m + 1))
        ranks = text.ranks[start:start + m].copy()
        flips = gen.random(m) < 0.1
        ranks[flips] = gen.integers(1, sigma + 1, size=int(flips.sum()))
        if wild:
            ranks[gen.random(m) < wild] = 0
        return text, Sequence(ranks=ranks)
    return text, random_sequence(gen, m, sigma, wild)


@pytest.fixture
def gen() -> np.random.Generator:
    return np.random.default_rng(20240611)


@pytest.fixture
def corpus_dir(tmp_path):
    (tmp_path / "text.txt").write_bytes(b"abcab\n")
    (tmp_path / "pattern.txt").write_bytes(b"abc\n")
    return tmp_path
