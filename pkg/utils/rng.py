from __future__ import annotations

from typing import Optional

import numpy as np
from numpy.random import Generator, Philox, SeedSequence


class SeededRng:
    """
    Reproducible random source on the counter-based Philox generator.
    Sub-streams come from SeedSequence.spawn, so the n-th child of a given
    seed is always the same stream regardless of what the parent drew.
    """

    def __init__(self, seed: int | SeedSequence = 0) -> None:
        if isinstance(seed, SeedSequence):
            self._seed_seq = seed
        else:
            if seed < 0:
                raise ValueError("seed must be non-negative")
            self._seed_seq = SeedSequence(seed)
        self.generator: Generator = Generator(Philox(self._seed_seq))

    @property
    def seed(self) -> int:
        return int(self._seed_seq.entropy)

    def spawn(self, count: int) -> list[SeededRng]:
        return [SeededRng(child) for child in self._seed_seq.spawn(count)]

    def child(self) -> SeededRng:
        return self.spawn(1)[0]

    def subset(self, population: int, count: int) -> np.ndarray:
        """`count` distinct values of [0..population), uniformly chosen."""
        return self.generator.choice(population, size=count, replace=False)

    def integers(self, low: int, high: int, size: Optional[int] = None):
        return self.generator.integers(low, high, size=size)

    def random(self, size: Optional[int] = None):
        return self.generator.random(size)


def as_rng(rng: SeededRng | int | None, default_seed: int = 0) -> SeededRng:
    if isinstance(rng, SeededRng):
        return rng
    return SeededRng(default_seed if rng is None else rng)
