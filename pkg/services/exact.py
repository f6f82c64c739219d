"""
Deterministic full-profile algorithms.

Both profiles split the pattern alphabet in two: the most frequent characters
are counted with one indicator correlation each, the remaining ones by marking
(walking every text occurrence and crediting each alignment that places an
equal pattern character on it).
"""
from __future__ import annotations

import logging
import math
from typing import Optional

import numpy as np

from models.counting import PositionTable, WorkCounters
from models.profile import DistanceProfile, MarkVector
from models.sequence import WILDCARD_RANK, Sequence
from services.convolution import correlate, indicator_correlate
from services.naive import check_lengths
from utils.errors import InvalidInputError

logger = logging.getLogger(__name__)


def mark(text: Sequence, table: PositionTable, counters: Optional[WorkCounters] = None) -> MarkVector:
    """
    For every text position i and every pattern position j holding t_i, add
    one mark to alignment i - j + 1 (when positive). The vector has length
    n; only its first n - m + 1 entries are full alignments.
    """
    t = text.ranks
    marks = np.zeros(text.length, dtype=np.int64)
    if not table.pos:
        return MarkVector(marks=marks)

    order = np.argsort(t, kind="stable")
    ordered = t[order]
    created = 0
    for rank, positions in table.pos.items():
        if rank == WILDCARD_RANK:
            raise InvalidInputError("the wild card cannot be marked")
        lo, hi = np.searchsorted(ordered, [rank, rank + 1])
        hits = order[lo:hi]
        if not hits.size:
            continue
        for j in positions:
            target = hits - (j - 1)
            target = target[target >= 0]
            # distinct hits give distinct targets, so plain fancy-index add is exact
            marks[target] += 1
            created += int(target.size)

    if counters is not None:
        counters.marks_created += created
    return MarkVector(marks=marks)


def frequent_set_size(weight: int, m: int, distinct: int) -> int:
    """|A| = max(1, ceil(sqrt(weight / log2 max(m, 2)))), at most `distinct`."""
    size = max(1, math.ceil(math.sqrt(weight / math.log2(max(m, 2)))))
    return min(size, distinct)


def _count_matches(
    text: Sequence,
    pattern: Sequence,
    table: PositionTable,
    size: int,
    counters: Optional[WorkCounters],
    engine: dict,
) -> np.ndarray:
    alignments = text.length - pattern.length + 1
    ranked = table.by_frequency()
    frequent, rare = ranked[:size], ranked[size:]
    logger.debug("counting matches: %d convolved, %d marked", len(frequent), len(rare))

    matches = np.zeros(alignments, dtype=np.int64)
    for alpha in frequent:
        matches += indicator_correlate(text, pattern, alpha, counters=counters, **engine)
    if rare:
        marked = table.restricted({alpha: table.freq(alpha) for alpha in rare})
        matches += mark(text, marked, counters).alignments(alignments)
    return matches


def abrahamson_profile(
    text: Sequence,
    pattern: Sequence,
    counters: Optional[WorkCounters] = None,
    **engine,
) -> DistanceProfile:
    """Exact Hamming distances of wild-card-free inputs in O(n sqrt(m log m))."""
    _, m = check_lengths(text, pattern)
    if text.has_wildcards or pattern.has_wildcards:
        raise InvalidInputError("abrahamson_profile does not accept wild cards; use wildcard_profile")

    table = PositionTable.build(pattern)
    size = frequent_set_size(m, m, len(table.pos))
    matches = _count_matches(text, pattern, table, size, counters, engine)
    return DistanceProfile(distances=m - matches)


def wildcard_profile(
    text: Sequence,
    pattern: Sequence,
    counters: Optional[WorkCounters] = None,
    **engine,
) -> DistanceProfile:
    """
    Exact Hamming distances where the wild card (rank 0) on either side
    matches everything. Distances are the positions where both sides are
    non-wild, less the matches among them.
    """
    n, m = check_lengths(text, pattern)
    table = PositionTable.build(pattern)
    g = table.g
    if g == 0:
        return DistanceProfile(distances=np.zeros(n - m + 1, dtype=np.int64))

    size = frequent_set_size(g, m, len(table.pos))
    matches = _count_matches(text, pattern, table, size, counters, engine)
    compared = correlate(
        (text.ranks != WILDCARD_RANK).astype(np.int64),
        (pattern.ranks != WILDCARD_RANK).astype(np.int64),
        counters=counters,
        **engine,
    )
    return DistanceProfile(distances=compared - matches)
