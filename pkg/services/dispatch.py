from __future__ import annotations

import logging
from typing import Optional, Union

import numpy as np

from models.counting import WorkCounters
from models.profile import BoundedReport, DistanceProfile
from models.run import PROFILE_ALGORITHMS, Algorithm
from models.sequence import Sequence
from services.exact import abrahamson_profile, wildcard_profile
from services.kmismatch import knapsack_k_mismatches, subset_k_mismatches
from services.naive import check_lengths, naive_profile
from services.randomized import las_vegas_k_mismatches
from utils.errors import InvalidInputError
from utils.rng import SeededRng

logger = logging.getLogger(__name__)

Result = Union[DistanceProfile, BoundedReport]


def run_algorithm(
    algorithm: Algorithm,
    text: Sequence,
    pattern: Sequence,
    k: Optional[int] = None,
    *,
    rng: Optional[SeededRng] = None,
    alpha: Optional[float] = None,
    budget: Optional[float] = None,
    step_constant: Optional[float] = None,
    phase_constant: Optional[float] = None,
    counters: Optional[WorkCounters] = None,
) -> Result:
    """Run one exact algorithm: a full profile, or a k-mismatch report over every alignment."""
    if algorithm == Algorithm.NAIVE:
        return naive_profile(text, pattern)
    if algorithm == Algorithm.ABRAHAMSON:
        return abrahamson_profile(text, pattern, counters=counters)
    if algorithm == Algorithm.WILDCARD:
        return wildcard_profile(text, pattern, counters=counters)

    if k is None:
        raise InvalidInputError(f"{algorithm.value} needs a mismatch threshold k")
    if algorithm == Algorithm.SUBSET:
        n, m = check_lengths(text, pattern)
        return subset_k_mismatches(text, pattern, range(1, n - m + 2), k, counters=counters)
    if algorithm == Algorithm.KNAPSACK:
        return knapsack_k_mismatches(text, pattern, k, budget=budget, counters=counters)
    if algorithm == Algorithm.LAS_VEGAS:
        return las_vegas_k_mismatches(
            text,
            pattern,
            k,
            alpha=alpha,
            rng=rng,
            step_constant=step_constant,
            phase_constant=phase_constant,
            counters=counters,
        )
    raise InvalidInputError(f"{algorithm.value} is not an exact algorithm")


def disagreements(algorithm: Algorithm, result: Result, oracle: DistanceProfile, k: Optional[int]) -> np.ndarray:
    """1-based alignments where `result` differs from the naive oracle."""
    expected = oracle if algorithm in PROFILE_ALGORITHMS else oracle.threshold(k)
    if result.distances.size != expected.distances.size:
        return expected.positions
    return expected.positions[result.distances != expected.distances]
