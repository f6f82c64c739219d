from __future__ import annotations

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator

from models.sequence import readonly_int_array


def floor_log2(values: np.ndarray) -> np.ndarray:
    """floor(log2 v) of positive integers below 2**53."""
    return np.frexp(values.astype(np.float64))[1] - 1


# -----------------------------------------------------------------------------
# Suffix index over the pattern
# -----------------------------------------------------------------------------
class SuffixIndex(BaseModel):
    """
    Suffix array, inverse ranks, LCP and a sparse range-minimum table over a
    wild-card-free pattern. All arrays are 0-based and read-only; the query
    helpers take scalars or arrays alike.
    """
    pattern: np.ndarray = Field(..., description="Pattern ranks")
    sa: np.ndarray = Field(..., description="0-based suffix starts in lexicographic order")
    rank: np.ndarray = Field(..., description="rank[i] is the row of suffix i in sa")
    lcp: np.ndarray = Field(..., description="lcp[r] = LCP(sa[r-1], sa[r]); lcp[0] = 0")
    sparse: np.ndarray = Field(
        ...,
        description="sparse[q, r] = min(lcp[r .. r + 2**q - 1]) where that range exists"
    )

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    @field_validator("pattern", "sa", "rank", "lcp", mode="before")
    @classmethod
    def _as_array(cls, value) -> np.ndarray:
        return readonly_int_array(value)

    @field_validator("sparse", mode="before")
    @classmethod
    def _as_table(cls, value) -> np.ndarray:
        table = np.array(value, dtype=np.int64, copy=True)
        if table.ndim != 2:
            raise ValueError(f"sparse must be two-dimensional, got shape {table.shape}")
        table.flags.writeable = False
        return table

    @property
    def length(self) -> int:
        return int(self.pattern.size)

    @property
    def suffix_array(self) -> list[int]:
        """1-based suffix start positions in lexicographic order."""
        return (self.sa + 1).tolist()

    def rmq(self, a, b):
        """min(lcp[a+1..b]) for suffix-array rows a < b."""
        lo, hi = np.asarray(a) + 1, np.asarray(b)
        level = floor_log2(hi - lo + 1)
        found = np.minimum(self.sparse[level, lo], self.sparse[level, hi - (1 << level) + 1])
        return int(found) if found.ndim == 0 else found


class MatchStat(BaseModel):
    text_pos: int = Field(..., ge=1, description="1-based text position the match starts at")
    length: int = Field(..., ge=0, description="Length l of the longest match")
    witness: int = Field(..., ge=1, description="1-based pattern position j with T[i..i+l-1] = P[j..j+l-1]")

    model_config = ConfigDict(frozen=True)
