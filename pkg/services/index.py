"""
Suffix-array machinery over the pattern.

Matching statistics are searched for many text offsets at once: text and
pattern suffixes are packed several symbols per int64 code, and every offset
narrows its suffix-array interval one packed chunk at a time.
"""
from __future__ import annotations

import logging
from typing import Callable

import numpy as np

from models.index import MatchStat, SuffixIndex, floor_log2
from models.sequence import WILDCARD_RANK, Sequence
from utils.errors import InvalidInputError

logger = logging.getLogger(__name__)

# Packed codes stay below 2**52 so floor_log2 is exact on them
PACK_BITS = 52


# -----------------------------------------------------------------------------
# Construction
# -----------------------------------------------------------------------------
def _suffix_array(p: np.ndarray) -> np.ndarray:
    """Prefix doubling; a suffix that ends sorts before any extension of it."""
    m = p.size
    rank = p.astype(np.int64)
    span = 1
    while True:
        second = np.full(m, -1, dtype=np.int64)
        if span < m:
            second[:m - span] = rank[span:]
        order = np.lexsort((second, rank))
        first_key, second_key = rank[order], second[order]
        boundary = (np.diff(first_key) != 0) | (np.diff(second_key) != 0)
        rank = np.empty(m, dtype=np.int64)
        rank[order] = np.concatenate(([0], np.cumsum(boundary)))
        if int(rank.max()) == m - 1 or span >= m:
            return order
        span *= 2


def _kasai(p: list[int], sa: list[int], rank: list[int]) -> list[int]:
    m = len(p)
    lcp = [0] * m
    h = 0
    for i in range(m):
        r = rank[i]
        if r == 0:
            h = 0
            continue
        j = sa[r - 1]
        while i + h < m and j + h < m and p[i + h] == p[j + h]:
            h += 1
        lcp[r] = h
        if h:
            h -= 1
    return lcp


def _sparse_table(lcp: np.ndarray) -> np.ndarray:
    levels = [lcp]
    width = 1
    while 2 * width <= lcp.size:
        prev = levels[-1]
        levels.append(np.minimum(prev[:-width], prev[width:]))
        width *= 2
    table = np.zeros((len(levels), lcp.size), dtype=np.int64)
    for level, row in enumerate(levels):
        table[level, :row.size] = row
    return table


def build_index(pattern: Sequence) -> SuffixIndex:
    """Suffix array, LCP array and range-minimum table of a wild-card-free pattern."""
    if pattern.length < 1:
        raise InvalidInputError("cannot index an empty pattern")
    if pattern.has_wildcards:
        raise InvalidInputError("the pattern index is defined for wild-card-free patterns only")

    sa = _suffix_array(pattern.ranks)
    rank = np.empty_like(sa)
    rank[sa] = np.arange(sa.size)
    lcp = np.array(_kasai(pattern.ranks.tolist(), sa.tolist(), rank.tolist()), dtype=np.int64)
    logger.debug("indexed pattern of length %d", pattern.length)
    return SuffixIndex(pattern=pattern.ranks, sa=sa, rank=rank, lcp=lcp, sparse=_sparse_table(lcp))


# -----------------------------------------------------------------------------
# Longest common extensions
# -----------------------------------------------------------------------------
def lce(index: SuffixIndex, i, j):
    """
    Longest common extension of pattern suffixes i and j (1-based). Takes two
    positions or two equal-length arrays of them.
    """
    scalar = np.ndim(i) == 0 and np.ndim(j) == 0
    i = np.atleast_1d(np.asarray(i, dtype=np.int64))
    j = np.atleast_1d(np.asarray(j, dtype=np.int64))
    out = index.length - i + 1
    a, b = index.rank[i - 1], index.rank[j - 1]
    differ = np.flatnonzero(a != b)
    if differ.size:
        a, b = a[differ], b[differ]
        out[differ] = index.rmq(np.minimum(a, b), np.maximum(a, b))
    return int(out[0]) if scalar else out


# -----------------------------------------------------------------------------
# Matching statistics
# -----------------------------------------------------------------------------
def _packing(largest_rank: int) -> tuple[int, int]:
    """(bits per symbol, symbols per code)."""
    bits = max(1, int(largest_rank).bit_length())
    return bits, max(1, PACK_BITS // bits)


def _pack(ranks: np.ndarray, bits: int, chunk: int) -> np.ndarray:
    """codes[x] packs ranks[x .. x + chunk - 1] first-symbol-high, 0 past the end; x = 0 .. len."""
    size = ranks.size + 1
    block = np.zeros(size + chunk, dtype=np.int64)
    block[:ranks.size] = ranks
    codes = np.zeros(size, dtype=np.int64)
    width, have, left = 1, 0, chunk
    while left:
        if left & 1:
            codes = (codes << (width * bits)) | block[have:have + size]
            have += width
        left >>= 1
        if left:
            block = (block[:-width] << (width * bits)) | block[width:]
            width *= 2
    return codes


def _bisect(
    keys_of: Callable[[np.ndarray], np.ndarray],
    query: np.ndarray,
    lo: np.ndarray,
    hi: np.ndarray,
    right: bool,
) -> np.ndarray:
    """Per-element bisect_left (or bisect_right) of query[x] within rows [lo[x], hi[x])."""
    lo, hi = lo.copy(), hi.copy()
    todo = np.flatnonzero(lo < hi)
    while todo.size:
        mid = (lo[todo] + hi[todo]) // 2
        key = keys_of(mid)
        target = query[todo]
        up = key <= target if right else key < target
        lo[todo] = np.where(up, mid + 1, lo[todo])
        hi[todo] = np.where(up, hi[todo], mid)
        todo = todo[lo[todo] < hi[todo]]
    return lo


def match_lengths(index: SuffixIndex, text, starts) -> tuple[np.ndarray, np.ndarray]:
    """
    For every 0-based offset in `starts`: the longest l such that text[s ..
    s + l - 1] occurs in the pattern, and a 1-based pattern witness j (1
    when l = 0). A wild card never extends a match.
    """
    t = np.asarray(text, dtype=np.int64)
    starts = np.asarray(starts, dtype=np.int64)
    n, m, sa = t.size, index.length, index.sa
    bits, chunk = _packing(max(int(t.max(initial=0)), int(index.pattern.max())))
    text_codes = _pack(t, bits, chunk)
    suffix_codes = _pack(index.pattern, bits, chunk)
    stops = np.flatnonzero(t == WILDCARD_RANK)
    ends = np.append(stops, n)

    lengths = np.zeros(starts.size, dtype=np.int64)
    witness = np.ones(starts.size, dtype=np.int64)
    alive = np.arange(starts.size)
    lo = np.zeros(starts.size, dtype=np.int64)
    hi = np.full(starts.size, m, dtype=np.int64)
    depth = 0
    while alive.size:
        pos = starts[alive] + depth
        query = text_codes[pos]
        room = ends[np.searchsorted(stops, pos)] - pos

        def keys_of(rows: np.ndarray) -> np.ndarray:
            return suffix_codes[np.minimum(sa[rows] + depth, m)]

        if depth == 0:
            ordered = suffix_codes[sa]
            left = np.searchsorted(ordered, query, side="left")
        else:
            left = _bisect(keys_of, query, lo, hi, right=False)

        # the longest extension is found next to the insertion point
        best = np.full(alive.size, -1, dtype=np.int64)
        gain = np.full(alive.size, -1, dtype=np.int64)
        for row, valid in ((left - 1, left > lo), (left, left < hi)):
            row = np.where(valid, row, lo)
            diff = query ^ keys_of(row)
            same = np.where(diff == 0, chunk, (chunk * bits - floor_log2(diff) - 1) // bits)
            reach = np.minimum(np.minimum(same, room), m - sa[row] - depth)
            better = valid & (reach > gain)
            best = np.where(better, row, best)
            gain = np.where(better, reach, gain)

        lengths[alive] = depth + gain
        witness[alive] = np.where(depth + gain > 0, sa[best] + 1, 1)
        full = gain == chunk
        if depth == 0:
            right = np.searchsorted(ordered, query[full], side="right")
        else:
            right = _bisect(keys_of, query[full], left[full], hi[full], right=True)
        alive, lo, hi = alive[full], left[full], right
        depth += chunk
    return lengths, witness


def matching_statistics(index: SuffixIndex, text: Sequence, start: int) -> MatchStat:
    """Longest prefix of text[start..] that occurs in the pattern (1-based)."""
    if not 1 <= start <= text.length:
        raise InvalidInputError(f"text position {start} outside [1..{text.length}]")
    lengths, witness = match_lengths(index, text.ranks, [start - 1])
    return MatchStat(text_pos=start, length=int(lengths[0]), witness=int(witness[0]))
