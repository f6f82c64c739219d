from __future__ import annotations
from enum import Enum as PyEnum
from typing import Optional, List
import math

from pydantic import BaseModel, Field, field_validator

BENCH_HEADER = ("algorithm", "n", "m", "k", "sigma", "seed", "ms", "marks", "convs", "lce")

# -----------------------------------------------------------------------------
# Enums
# -----------------------------------------------------------------------------
class BenchStatus(PyEnum):
    """Status of a bench cell"""
    PENDING = "pending"         # Cell queued but not started
    RUNNING = "running"         # Algorithm currently timed
    COMPLETED = "completed"     # Finished, record filled in
    FAILED = "failed"           # Algorithm raised; record carries ms = nan

# -----------------------------------------------------------------------------
# Pydantic Schemas
# -----------------------------------------------------------------------------
class BenchCell(BaseModel):
    algorithm: str = Field(
        ...,
        description="Algorithm timed in this cell"
    )
    n: int = Field(
        ...,
        ge=1,
        description="Text length after truncation"
    )
    m: int = Field(
        ...,
        ge=1,
        description="Pattern length"
    )
    k: int = Field(
        ...,
        ge=1,
        description="Mismatch threshold (ignored by the exact-profile algorithms)"
    )
    sigma: Optional[int] = Field(
        None,
        ge=1,
        description="Alphabet size of a synthetic text; None when a corpus file is used"
    )
    seed: int = Field(
        ...,
        ge=0,
        description="Seed of the pattern extraction and of the algorithm itself"
    )
    status: BenchStatus = Field(
        BenchStatus.PENDING,
        description="Current status of the cell"
    )
    error_message: Optional[str] = Field(
        None,
        description="Error message if the cell failed"
    )

class BenchRecord(BaseModel):
    algorithm: str = Field(..., description="Algorithm name")
    n: int = Field(..., ge=1, description="Text length")
    m: int = Field(..., ge=1, description="Pattern length")
    k: int = Field(..., ge=1, description="Mismatch threshold")
    sigma: int = Field(..., ge=0, description="Distinct non-wild-card symbols in the text")
    seed: int = Field(..., ge=0, description="Cell seed")
    ms: float = Field(..., description="Elapsed wall-clock milliseconds of the algorithm call")
    marks: int = Field(0, ge=0, description="Marks created")
    convs: int = Field(0, ge=0, description="Convolutions run")
    lce: int = Field(0, ge=0, description="Longest-common-extension queries")

    @field_validator("ms")
    @classmethod
    def _elapsed(cls, value: float) -> float:
        if not (value >= 0 or math.isnan(value)):
            raise ValueError("elapsed time cannot be negative")
        return value

    def row(self) -> List[str]:
        return [
            self.algorithm,
            str(self.n),
            str(self.m),
            str(self.k),
            str(self.sigma),
            str(self.seed),
            f"{self.ms:.3f}",
            str(self.marks),
            str(self.convs),
            str(self.lce),
        ]
