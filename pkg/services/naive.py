from __future__ import annotations

import numpy as np

from models.profile import DistanceProfile
from models.sequence import WILDCARD_RANK, Sequence
from utils.errors import EmptyProfileError


def check_lengths(text: Sequence, pattern: Sequence) -> tuple[int, int]:
    n, m = text.length, pattern.length
    if m < 1 or m > n:
        raise EmptyProfileError(n, m)
    return n, m


def naive_profile(text: Sequence, pattern: Sequence) -> DistanceProfile:
    """
    Hamming distance of every alignment by direct comparison, O(nm).
    A wild card on either side matches anything. This is the oracle the
    other algorithms are checked against.
    """
    n, m = check_lengths(text, pattern)
    alignments = n - m + 1
    t = text.ranks
    distances = np.zeros(alignments, dtype=np.int64)
    for j, symbol in enumerate(pattern.ranks.tolist()):
        if symbol == WILDCARD_RANK:
            continue
        window = t[j:j + alignments]
        distances += (window != symbol) & (window != WILDCARD_RANK)
    return DistanceProfile(distances=distances)
