from __future__ import annotations

from enum import IntEnum

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator

from models.profile import EXCEEDS_K, BoundedReport


# -----------------------------------------------------------------------------
# Enums
# -----------------------------------------------------------------------------
class Verdict(IntEnum):
    """Outcome of the 1-mismatch test for one alignment"""
    ZERO_MISMATCH = 0       # every error term vanished
    EXACTLY_ONE = 1         # a single mismatch, located
    OTHER = 2               # two or more mismatches


# -----------------------------------------------------------------------------
# 1-mismatch verdicts
# -----------------------------------------------------------------------------
class OneMismatchVerdict(BaseModel):
    kinds: np.ndarray = Field(..., description="Verdict code per alignment")
    positions: np.ndarray = Field(
        ...,
        description="1-based text position of the single mismatch, 0 unless EXACTLY_ONE"
    )

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    @field_validator("kinds", "positions", mode="before")
    @classmethod
    def _readonly(cls, value) -> np.ndarray:
        arr = np.array(value, dtype=np.int64, copy=True)
        arr.flags.writeable = False
        return arr

    def __len__(self) -> int:
        return int(self.kinds.size)

    def verdict(self, alignment: int) -> Verdict:
        return Verdict(int(self.kinds[alignment - 1]))


# -----------------------------------------------------------------------------
# Mismatch ledger
# -----------------------------------------------------------------------------
class MismatchLedger(BaseModel):
    """
    Per-alignment residual error E_i and discovered mismatches L(i).
    E_i reaches 0 exactly when every mismatch of alignment i is in L(i).
    """
    k: int = Field(..., ge=0)
    m: int = Field(..., ge=1)
    residual: np.ndarray = Field(..., description="E_i per alignment")
    found: dict[int, set[int]] = Field(
        default_factory=dict,
        description="0-based alignment -> discovered mismatching text positions (1-based)"
    )
    counts: np.ndarray = Field(..., description="|L(i)| per alignment")

    model_config = ConfigDict(arbitrary_types_allowed=True)

    @classmethod
    def open(cls, residual: np.ndarray, k: int, m: int) -> MismatchLedger:
        residual = np.array(residual, dtype=np.int64, copy=True)
        return cls(k=k, m=m, residual=residual, counts=np.zeros(residual.size, dtype=np.int64))

    def __len__(self) -> int:
        return int(self.residual.size)

    def settled(self) -> np.ndarray:
        """Alignments whose answer is known: all mismatches found, or more than k."""
        return (self.residual == 0) | (self.counts > self.k)

    def done(self) -> bool:
        return bool(self.settled().all())

    def mismatches(self, alignment: int) -> set[int]:
        return set(self.found.get(alignment - 1, ()))

    def record(self, alignment0: int, text_pos: int, error_term: int) -> bool:
        """Add a mismatch to L(i); returns False when it was already known."""
        known = self.found.setdefault(alignment0, set())
        if text_pos in known:
            return False
        known.add(text_pos)
        self.counts[alignment0] += 1
        self.residual[alignment0] -= error_term
        return True

    def report(self) -> BoundedReport:
        exact = (self.residual == 0) & (self.counts <= self.k)
        distances = np.where(exact, self.counts, EXCEEDS_K)
        return BoundedReport(
            k=self.k,
            positions=np.arange(1, len(self) + 1, dtype=np.int64),
            distances=distances,
        )


# -----------------------------------------------------------------------------
# Estimates
# -----------------------------------------------------------------------------
class EstimateProfile(BaseModel):
    h: np.ndarray = Field(..., description="Estimated Hamming distance per alignment")
    epsilon: float = Field(..., gt=0, lt=1)
    alpha: float = Field(..., gt=0)
    r: int = Field(..., ge=1, description="Number of sampling phases")
    one_sided: bool = Field(False, description="Estimates scaled so that h_i >= H_i w.h.p.")

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    @field_validator("h", mode="before")
    @classmethod
    def _readonly(cls, value) -> np.ndarray:
        arr = np.array(value, dtype=np.float64, copy=True)
        if arr.size and float(arr.min()) < 0:
            raise ValueError("estimates must be non-negative")
        arr.flags.writeable = False
        return arr

    def __len__(self) -> int:
        return int(self.h.size)
