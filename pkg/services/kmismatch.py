"""
Deterministic k-mismatch search.

subset_k_mismatches answers a chosen set of alignments with memory bounded
by the pattern plus one scan block: the text is cut into maximal segments
that occur in the pattern, and inside a segment every alignment is compared
pattern-against-pattern with longest-common-extension jumps.
knapsack_k_mismatches picks 2k cheap pattern instances, marks with them, and
either filters candidates for the subset scan (knapsack filled) or finishes
with exact counting (not filled).
"""
from __future__ import annotations

import logging
import math
from typing import Iterable, Mapping, Optional

import numpy as np

from models.counting import KnapsackPlan, PositionTable, WorkCounters, text_frequencies
from models.index import SuffixIndex
from models.profile import EXCEEDS_K, BoundedReport
from models.sequence import Sequence
from services.convolution import indicator_correlate
from services.exact import mark
from services.index import build_index, lce, match_lengths
from services.naive import check_lengths
from utils.errors import InvalidInputError

logger = logging.getLogger(__name__)

# Alignment start positions scanned together
SCAN_BLOCK = 1 << 16


def _require_plain(text: Sequence, pattern: Sequence, name: str) -> None:
    if text.has_wildcards or pattern.has_wildcards:
        raise InvalidInputError(f"{name} does not accept wild cards")


# -----------------------------------------------------------------------------
# Subset k-mismatches
# -----------------------------------------------------------------------------
def update_mism(
    c,
    s1,
    s2,
    l,
    k: int,
    index: SuffixIndex,
    counters: Optional[WorkCounters] = None,
):
    """
    c plus the mismatches of P[s1..s1+l-1] against P[s2..s2+l-1], stopping
    past k. Takes scalars or equal-length arrays, one comparison per entry.
    """
    scalar = all(np.ndim(v) == 0 for v in (c, s1, s2, l))
    c, s1, s2, l = (np.array(v, dtype=np.int64, ndmin=1) for v in (c, s1, s2, l))
    live = np.flatnonzero((l > 0) & (c <= k))
    while live.size:
        d = lce(index, s1[live], s2[live])
        if counters is not None:
            counters.lce_queries += int(live.size)
        miss = d < l[live]
        step = d + 1
        c[live] += miss
        s1[live] += step
        s2[live] += step
        l[live] = np.where(miss, l[live] - step, 0)
        live = live[(l[live] > 0) & (c[live] <= k)]
    return int(c[0]) if scalar else c


def text_segments(
    index: SuffixIndex,
    text: np.ndarray,
    starts: np.ndarray,
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """
    Cut the text covered by the windows [s, s + m - 1] of the sorted 1-based
    `starts` into maximal pieces that occur in the pattern. A piece starting
    at i with length l is followed by the single character i + l; the next
    piece starts at the first covered position after that character.
    Returns 1-based piece starts, lengths and pattern witnesses.
    """
    m, n = index.length, text.size
    first = int(starts[0])
    span = min(int(starts[-1]) + m - 1, n) - first + 1
    opened = np.bincount(starts - first, minlength=span + 1)
    closed = np.bincount(np.minimum(starts - first + m, span), minlength=span + 1)
    covered = np.cumsum(opened - closed)[:span] > 0

    # a match from a covered position ends at most m - 1 symbols later
    window = text[first - 1:min(n, first - 1 + span + m)]
    lengths, witness = match_lengths(index, window, np.flatnonzero(covered))
    length_at = np.zeros(span, dtype=np.int64)
    witness_at = np.ones(span, dtype=np.int64)
    length_at[covered] = lengths
    witness_at[covered] = witness
    resume = np.minimum.accumulate(np.where(covered, np.arange(span), span)[::-1])[::-1]

    step, resume = (length_at + 1).tolist(), resume.tolist() + [span]
    pieces = []
    x = 0
    while x < span:
        pieces.append(x)
        x = resume[min(x + step[x], span)]
    pieces = np.array(pieces, dtype=np.int64)
    return pieces + first, length_at[pieces], witness_at[pieces]


def subset_k_mismatches(
    text: Sequence,
    pattern: Sequence,
    positions: Iterable[int],
    k: int,
    index: Optional[SuffixIndex] = None,
    counters: Optional[WorkCounters] = None,
) -> BoundedReport:
    """
    Bounded distances of the chosen alignments. The covered text is cut into
    maximal pattern pieces; every alignment walks the pieces overlapping its
    window with update_mism and compares each character between two pieces
    directly. All alignments of a block of SCAN_BLOCK start positions advance
    together, one piece per round.
    """
    n, m = check_lengths(text, pattern)
    _require_plain(text, pattern, "subset_k_mismatches")
    if k < 0:
        raise InvalidInputError(f"k must be non-negative, got {k}")

    pending = np.unique(np.fromiter(positions, dtype=np.int64))
    if pending.size and (pending[0] < 1 or pending[-1] > n - m + 1):
        raise InvalidInputError(f"alignments must lie in [1..{n - m + 1}]")
    if not pending.size:
        return BoundedReport(k=k, positions=[], distances=[])

    index = index if index is not None else build_index(pattern)
    counters = counters if counters is not None else WorkCounters()
    t, p = text.ranks, pattern.ranks
    distances = np.full(pending.size, EXCEEDS_K, dtype=np.int64)

    begin = 0
    while begin < pending.size:
        end = int(np.searchsorted(pending, pending[begin] + SCAN_BLOCK))
        starts = pending[begin:end]
        piece_start, piece_len, piece_wit = text_segments(index, t, starts)
        piece_end = piece_start + piece_len - 1
        counters.segments += int(piece_start.size)

        ids = np.arange(begin, end)
        s, q, c = starts.copy(), starts.copy(), np.zeros(starts.size, dtype=np.int64)
        while ids.size:
            r = np.searchsorted(piece_start, q, side="right") - 1
            inside = np.flatnonzero(q <= piece_end[r])
            if inside.size:
                rr, lo = r[inside], q[inside]
                hi = np.minimum(piece_end[rr], s[inside] + m - 1)
                c[inside] = update_mism(
                    c[inside], piece_wit[rr] + lo - piece_start[rr], lo - s[inside] + 1,
                    hi - lo + 1, k, index, counters,
                )
                q[inside] = hi + 1
            # the character ending a piece is compared directly
            between = np.flatnonzero((c <= k) & (q <= s + m - 1) & (q > piece_end[r]))
            if between.size:
                at = q[between]
                c[between] += t[at - 1] != p[at - s[between]]
                q[between] = at + 1
            done = (c > k) | (q > s + m - 1)
            distances[ids[done]] = np.where(c[done] > k, EXCEEDS_K, c[done])
            keep = ~done
            ids, s, q, c = ids[keep], s[keep], q[keep], c[keep]
        begin = end

    logger.debug(
        "subset scan: %d alignments, %d segments, %d lce queries",
        pending.size, counters.segments, counters.lce_queries,
    )
    return BoundedReport(k=k, positions=pending, distances=distances)


# -----------------------------------------------------------------------------
# Knapsack k-mismatches
# -----------------------------------------------------------------------------
def default_budget(n: int, k: int) -> float:
    """B = n * sqrt(k * log2 max(k, 2))."""
    return n * math.sqrt(k * math.log2(max(k, 2)))


def knapsack_plan(
    pattern_freq: Mapping[int, int],
    text_freq: Mapping[int, int],
    k: int,
    budget: float,
) -> KnapsackPlan:
    """
    Greedy fill of a 2k-instance knapsack in ascending text frequency (ties by
    rank). The budget is checked before each addition, so the final cost may
    overshoot it by one character's share.
    """
    if k < 1:
        raise InvalidInputError(f"k must be >= 1, got {k}")
    capacity = 2 * k
    order = sorted(
        (rank for rank, f in pattern_freq.items() if f > 0),
        key=lambda rank: (text_freq.get(rank, 0), rank),
    )
    picked: dict[int, int] = {}
    size = cost = 0
    for rank in order:
        if size >= capacity or cost >= budget:
            break
        take = min(pattern_freq[rank], capacity - size)
        picked[rank] = take
        size += take
        cost += take * text_freq.get(rank, 0)
    return KnapsackPlan(
        picked=picked,
        size=size,
        cost=cost,
        budget=budget,
        capacity=capacity,
        filled=size == capacity,
    )


def knapsack_k_mismatches(
    text: Sequence,
    pattern: Sequence,
    k: int,
    budget: Optional[float] = None,
    counters: Optional[WorkCounters] = None,
    **engine,
) -> BoundedReport:
    n, m = check_lengths(text, pattern)
    _require_plain(text, pattern, "knapsack_k_mismatches")
    if not 1 <= k <= m:
        raise InvalidInputError(f"k must lie in [1..{m}], got {k}")

    counters = counters if counters is not None else WorkCounters()
    alignments = n - m + 1
    table = PositionTable.build(pattern)
    budget = default_budget(n, k) if budget is None else budget
    plan = knapsack_plan(table.frequencies(), text_frequencies(text), k, budget)

    if plan.filled:
        counters.knapsack_case = 1
        marks = mark(text, table.restricted(plan.picked), counters).alignments(alignments)
        candidates = np.flatnonzero(marks >= k) + 1
        counters.candidates = int(candidates.size)
        logger.debug("knapsack filled: cost %d, %d candidates", plan.cost, candidates.size)

        distances = np.full(alignments, EXCEEDS_K, dtype=np.int64)
        found = subset_k_mismatches(text, pattern, candidates, k, counters=counters)
        distances[found.positions - 1] = found.distances
        return BoundedReport(k=k, positions=np.arange(1, alignments + 1), distances=distances)

    counters.knapsack_case = 2
    full = plan.fully_picked(table)
    logger.debug("knapsack not filled: %d of %d instances, %d characters marked", plan.size, 2 * k, len(full))
    matches = mark(text, table.restricted({rank: table.freq(rank) for rank in full}), counters)
    matches = matches.alignments(alignments).copy()
    for rank in table.ranks:
        if rank not in full:
            matches += indicator_correlate(text, pattern, rank, counters=counters, **engine)
    distances = m - matches
    return BoundedReport(
        k=k,
        positions=np.arange(1, alignments + 1),
        distances=np.where(distances <= k, distances, EXCEEDS_K),
    )
