"""
Exact integer cross-correlation.

    c[i] = sum_j x[i + j] * y[j],  i = 0 .. n - m

Small patterns use direct summation in int64. From CONVOLUTION_CROSSOVER on,
inputs whose predicted magnitude m * max|x| * max|y| stays within
MAGNITUDE_BOUND go through a real FFT over power-of-two blocks of the text.
Operands are split into high and low limbs until every partial transform is
small enough to round back to the exact integer. Anything above DIRECT_BOUND
raises PrecisionError instead of returning a wrong value.
"""
from __future__ import annotations

import logging
from typing import Optional

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view

from config.settings import settings
from models.counting import WorkCounters
from models.sequence import Sequence
from utils.errors import EmptyProfileError, InvalidInputError, PrecisionError

logger = logging.getLogger(__name__)

# Largest predicted magnitude handed to a single floating transform
LIMB_BOUND = 2**40


def next_pow2(x: int) -> int:
    """Smallest power of two >= x (and >= 1)."""
    return 1 << max(0, (int(x) - 1).bit_length())


def _max_abs(values: np.ndarray) -> int:
    return int(np.abs(values).max()) if values.size else 0


def predicted_magnitude(x: np.ndarray, y: np.ndarray) -> int:
    """A-priori bound on every |c[i]|, computed with Python integers."""
    return len(y) * _max_abs(x) * _max_abs(y)


# -----------------------------------------------------------------------------
# Transform path
# -----------------------------------------------------------------------------
def _transform_correlate(x: np.ndarray, y: np.ndarray, batch_blocks: int) -> np.ndarray:
    n, m = len(x), len(y)
    size = 2 * next_pow2(2 * m)
    step = size - m + 1
    out_len = n - m + 1
    blocks = -(-out_len // step)

    padded = np.zeros(blocks * step + m - 1, dtype=np.float64)
    padded[:n] = x
    windows = sliding_window_view(padded, size)[::step]
    kernel = np.fft.rfft(y[::-1].astype(np.float64), size)

    out = np.empty(blocks * step, dtype=np.int64)
    for first in range(0, blocks, batch_blocks):
        chunk = windows[first:first + batch_blocks]
        full = np.fft.irfft(np.fft.rfft(chunk, size, axis=1) * kernel, size, axis=1)
        # entries m-1 .. size-1 of each block are free of circular wrap-around
        out[first * step:(first + len(chunk)) * step] = np.rint(full[:, m - 1:]).astype(np.int64).ravel()
    return out[:out_len]


def _limb_correlate(x: np.ndarray, y: np.ndarray, batch_blocks: int) -> np.ndarray:
    if predicted_magnitude(x, y) <= LIMB_BOUND:
        return _transform_correlate(x, y, batch_blocks)
    if _max_abs(x) >= _max_abs(y):
        shift = max(1, _max_abs(x).bit_length() // 2)
        high, low = x >> shift, x & ((1 << shift) - 1)
        return (_limb_correlate(high, y, batch_blocks) << shift) + _limb_correlate(low, y, batch_blocks)
    shift = max(1, _max_abs(y).bit_length() // 2)
    high, low = y >> shift, y & ((1 << shift) - 1)
    return (_limb_correlate(x, high, batch_blocks) << shift) + _limb_correlate(x, low, batch_blocks)


# -----------------------------------------------------------------------------
# Public API
# -----------------------------------------------------------------------------
def correlate(
    x,
    y,
    *,
    crossover: Optional[int] = None,
    magnitude_bound: Optional[int] = None,
    direct_bound: Optional[int] = None,
    counters: Optional[WorkCounters] = None,
) -> np.ndarray:
    """Pattern-alignment sum of `y` against every window of `x`, exact."""
    x = np.asarray(x, dtype=np.int64)
    y = np.asarray(y, dtype=np.int64)
    n, m = len(x), len(y)
    if m < 1 or m > n:
        raise EmptyProfileError(n, m)

    crossover = settings.CONVOLUTION_CROSSOVER if crossover is None else crossover
    magnitude_bound = settings.MAGNITUDE_BOUND if magnitude_bound is None else magnitude_bound
    direct_bound = settings.DIRECT_BOUND if direct_bound is None else direct_bound

    bound = predicted_magnitude(x, y)
    if counters is not None:
        counters.convolutions_run += 1
    if bound > direct_bound:
        raise PrecisionError(
            f"predicted correlation magnitude {bound} exceeds the exact bound {direct_bound}"
        )
    if bound == 0:
        return np.zeros(n - m + 1, dtype=np.int64)
    if m >= crossover and bound <= magnitude_bound:
        logger.debug("transform correlation n=%d m=%d bound=%d", n, m, bound)
        return _limb_correlate(x, y, settings.FFT_BATCH_BLOCKS)
    return np.correlate(x, y, mode="valid")


def indicator_correlate(
    text: Sequence,
    pattern: Sequence,
    alpha: int,
    counters: Optional[WorkCounters] = None,
    **engine,
) -> np.ndarray:
    """C^alpha[i]: number of j with p_j = t_{i+j-1} = alpha."""
    if alpha < 1:
        raise InvalidInputError(f"indicator rank must be >= 1, got {alpha}")
    return correlate(
        (text.ranks == alpha).astype(np.int64),
        (pattern.ranks == alpha).astype(np.int64),
        counters=counters,
        **engine,
    )


def power_correlate(
    text: Sequence,
    pattern: Sequence,
    a: int,
    b: int,
    position_weighted: bool = False,
    counters: Optional[WorkCounters] = None,
    **engine,
) -> np.ndarray:
    """sum_j (i+j-1)^w * t_{i+j-1}^a * p_j^b, with w = 1 when position_weighted."""
    if a not in (1, 2, 3) or b not in (1, 2, 3):
        raise InvalidInputError(f"exponents must lie in {{1, 2, 3}}, got a={a}, b={b}")
    x = text.ranks ** a
    if position_weighted:
        x = x * np.arange(1, text.length + 1, dtype=np.int64)
    return correlate(x, pattern.ranks ** b, counters=counters, **engine)
