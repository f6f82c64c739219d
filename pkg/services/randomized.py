"""
Randomized mismatch algorithms built on error terms

    e(i, j) = (t - p)^2 * t * p,   t = t_{i+j-1}, p = p_j

which vanish exactly on matches and on wild cards (rank 0). Their sum E_i
over an alignment is zero iff the alignment has no mismatch; the
position-weighted sum E'_i locates a lone mismatch at E'_i / E_i.
"""
from __future__ import annotations

import logging
import math
from typing import Optional

import numpy as np

from config.settings import settings
from models.counting import WorkCounters
from models.randomized import EstimateProfile, MismatchLedger, OneMismatchVerdict, Verdict
from models.profile import BoundedReport
from models.sequence import Sequence
from services.convolution import power_correlate
from services.naive import check_lengths
from utils.errors import InvalidInputError
from utils.rng import SeededRng, as_rng

logger = logging.getLogger(__name__)


def error_sums(
    text: Sequence,
    pattern: Sequence,
    weighted: bool = False,
    counters: Optional[WorkCounters] = None,
    **engine,
) -> np.ndarray:
    """E_i (or E'_i when weighted) as t^3 p - 2 t^2 p^2 + t p^3 correlations."""
    def term(a: int, b: int) -> np.ndarray:
        return power_correlate(text, pattern, a, b, position_weighted=weighted, counters=counters, **engine)

    return term(3, 1) - 2 * term(2, 2) + term(1, 3)


def _error_terms(t: np.ndarray, p: np.ndarray) -> np.ndarray:
    return (t - p) ** 2 * t * p


# -----------------------------------------------------------------------------
# 1-mismatch
# -----------------------------------------------------------------------------
def one_mismatch(
    text: Sequence,
    pattern: Sequence,
    counters: Optional[WorkCounters] = None,
    **engine,
) -> OneMismatchVerdict:
    """Classify every alignment as no mismatch, a single located one, or more."""
    check_lengths(text, pattern)
    m = pattern.length
    total = error_sums(text, pattern, counters=counters, **engine)
    weighted = error_sums(text, pattern, weighted=True, counters=counters, **engine)

    kinds = np.where(total == 0, Verdict.ZERO_MISMATCH, Verdict.OTHER).astype(np.int64)
    located = np.zeros(total.size, dtype=np.int64)

    idx = np.flatnonzero(total)
    if idx.size:
        quotient, remainder = np.divmod(weighted[idx], total[idx])
        start = idx + 1
        ok = (remainder == 0) & (quotient >= start) & (quotient <= start + m - 1)
        idx, quotient, start = idx[ok], quotient[ok], start[ok]
        t_at = text.ranks[quotient - 1]
        p_at = pattern.ranks[quotient - start]
        ok = _error_terms(t_at, p_at) == total[idx]
        kinds[idx[ok]] = Verdict.EXACTLY_ONE
        located[idx[ok]] = quotient[ok]

    return OneMismatchVerdict(kinds=kinds, positions=located)


def sample_project(pattern: Sequence, count: int, rng: SeededRng) -> Sequence:
    """Keep `count` uniformly chosen pattern positions, zero the rest."""
    m = pattern.length
    if not 1 <= count <= m:
        raise InvalidInputError(f"sample size must lie in [1..{m}], got {count}")
    chosen = rng.subset(m, count)
    ranks = np.zeros(m, dtype=np.int64)
    ranks[chosen] = pattern.ranks[chosen]
    return Sequence(ranks=ranks)


# -----------------------------------------------------------------------------
# Ledger updates
# -----------------------------------------------------------------------------
def open_ledger(
    text: Sequence,
    pattern: Sequence,
    k: int,
    counters: Optional[WorkCounters] = None,
    **engine,
) -> MismatchLedger:
    return MismatchLedger.open(error_sums(text, pattern, counters=counters, **engine), k, pattern.length)


def _isolate(
    text: Sequence,
    pattern: Sequence,
    sample: Sequence,
    ledger: MismatchLedger,
    counters: Optional[WorkCounters],
    engine: dict,
) -> int:
    verdict = one_mismatch(text, sample, counters=counters, **engine)
    hit = (verdict.kinds == Verdict.EXACTLY_ONE) & ~ledger.settled()
    alignments = np.flatnonzero(hit)
    if not alignments.size:
        return 0
    where = verdict.positions[alignments]
    terms = _error_terms(text.ranks[where - 1], pattern.ranks[where - alignments - 1])
    added = 0
    for alignment0, text_pos, term in zip(alignments.tolist(), where.tolist(), terms.tolist()):
        added += ledger.record(alignment0, text_pos, term)
    return added


def isolate_mismatches(
    text: Sequence,
    pattern: Sequence,
    k: int,
    rng: SeededRng,
    ledger: MismatchLedger,
    phase_constant: Optional[float] = None,
    counters: Optional[WorkCounters] = None,
    **engine,
) -> MismatchLedger:
    """
    ceil(c1 * k * log2 n) sampling phases of max(1, m // k) positions;
    every mismatch isolated by a phase is added to the ledger once.
    """
    n, m = text.length, pattern.length
    c1 = settings.ISOLATION_PHASE_CONSTANT if phase_constant is None else phase_constant
    phases = max(1, math.ceil(c1 * k * math.log2(n)))
    size = max(1, m // k)
    for phase in range(phases):
        if ledger.done():
            logger.debug("isolate_mismatches settled after %d of %d phases", phase, phases)
            break
        _isolate(text, pattern, sample_project(pattern, size, rng.child()), ledger, counters, engine)
    return ledger


def las_vegas_k_mismatches(
    text: Sequence,
    pattern: Sequence,
    k: int,
    alpha: Optional[float] = None,
    rng: SeededRng | int | None = None,
    step_constant: Optional[float] = None,
    phase_constant: Optional[float] = None,
    counters: Optional[WorkCounters] = None,
    **engine,
) -> BoundedReport:
    """
    k-mismatches whose answer is always exact: sampling rounds repeat until
    every alignment has either a zero residual (all mismatches found) or more
    than k known mismatches. Only the running time depends on the seed.
    """
    n, m = check_lengths(text, pattern)
    if not 1 <= k <= m:
        raise InvalidInputError(f"k must lie in [1..{m}], got {k}")
    alpha = settings.DEFAULT_ALPHA if alpha is None else alpha
    c = settings.LAS_VEGAS_STEP_CONSTANT if step_constant is None else step_constant
    rng = as_rng(rng, settings.DEFAULT_SEED)

    log_n = math.log2(max(n, 2))
    steps = math.ceil(c * k) if k >= log_n else math.ceil(c * alpha * log_n)
    ratio = m // (2 * k)
    # at least one phase so that single-position samples are always drawn
    w = max(1, int(math.log2(ratio)) if ratio >= 1 else 0)

    ledger = open_ledger(text, pattern, k, counters=counters, **engine)
    rounds = 0
    while not ledger.done():
        rounds += 1
        isolate_mismatches(text, pattern, k, rng, ledger, phase_constant, counters, **engine)
        for level in range(1, w + 1):
            size = max(1, m // (2 ** (level + 1) * k))
            for _ in range(steps):
                if ledger.done():
                    break
                _isolate(text, pattern, sample_project(pattern, size, rng.child()), ledger, counters, engine)
    logger.debug("las vegas finished after %d rounds (w=%d, %d steps per phase)", rounds, w, steps)
    return ledger.report()


# -----------------------------------------------------------------------------
# (1 +- eps) approximation
# -----------------------------------------------------------------------------
def random_symbol_map(sigma: int, rng: SeededRng) -> np.ndarray:
    """Lookup table: rank 0 -> 0, every rank in [1..sigma] -> uniform {1, 2}."""
    return np.concatenate(([0], rng.integers(1, 3, size=sigma))).astype(np.int64)


def phase_count(m: int, epsilon: float, alpha: float) -> int:
    return math.ceil(6 * (alpha + 3) * math.log(m) / epsilon**2)


def approx_count(
    text: Sequence,
    pattern: Sequence,
    epsilon: float,
    alpha: Optional[float] = None,
    rng: SeededRng | int | None = None,
    one_sided: bool = False,
    counters: Optional[WorkCounters] = None,
    **engine,
) -> EstimateProfile:
    """
    Average, over r random maps of the alphabet onto {1, 2}, of the mapped
    error sums. Each mismatching non-wild pair contributes 2 with
    probability 1/2. With one_sided the average is divided by (1 - eps) so
    that estimates stay above the true distance with high probability.
    """
    _, m = check_lengths(text, pattern)
    if not 0 < epsilon < 1:
        raise InvalidInputError(f"epsilon must lie strictly between 0 and 1, got {epsilon}")
    if m < 2:
        raise InvalidInputError("approx_count needs a pattern of length at least 2")
    alpha = settings.DEFAULT_ALPHA if alpha is None else alpha
    rng = as_rng(rng, settings.DEFAULT_SEED)

    r = phase_count(m, epsilon, alpha)
    sigma = max(text.max_rank, pattern.max_rank)
    logger.debug("approx_count: %d phases over sigma=%d", r, sigma)

    total = np.zeros(text.length - m + 1, dtype=np.int64)
    for _ in range(r):
        mapping = random_symbol_map(sigma, rng.child())
        total += error_sums(
            Sequence(ranks=mapping[text.ranks]),
            Sequence(ranks=mapping[pattern.ranks]),
            counters=counters,
            **engine,
        )

    scale = (1 - epsilon) * r if one_sided else r
    return EstimateProfile(h=total / scale, epsilon=epsilon, alpha=alpha, r=r, one_sided=one_sided)
