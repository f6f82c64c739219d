from __future__ import annotations

from typing import Iterator, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from models.sequence import readonly_int_array

# Marker stored in BoundedReport.distances for alignments with more than k mismatches
EXCEEDS_K = -1


# -----------------------------------------------------------------------------
# Distance profile
# -----------------------------------------------------------------------------
class DistanceProfile(BaseModel):
    distances: np.ndarray = Field(
        ...,
        description="Exact Hamming distance per alignment; distances[0] is alignment 1"
    )

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    @field_validator("distances", mode="before")
    @classmethod
    def _as_array(cls, value) -> np.ndarray:
        arr = readonly_int_array(value, "distances")
        if arr.size and int(arr.min()) < 0:
            raise ValueError("distances must be non-negative")
        return arr

    def __len__(self) -> int:
        return int(self.distances.size)

    @property
    def positions(self) -> np.ndarray:
        return np.arange(1, len(self) + 1, dtype=np.int64)

    def threshold(self, k: int) -> BoundedReport:
        """Oracle view of the profile as a k-mismatch report over every alignment."""
        values = np.where(self.distances <= k, self.distances, EXCEEDS_K)
        return BoundedReport(k=k, positions=self.positions, distances=values)


# -----------------------------------------------------------------------------
# Bounded report
# -----------------------------------------------------------------------------
class BoundedReport(BaseModel):
    """
    Output of a k-mismatch algorithm: for each reported alignment either the
    exact distance d <= k, or EXCEEDS_K.
    """
    k: int = Field(..., ge=0, description="Mismatch threshold")
    positions: np.ndarray = Field(
        ...,
        description="1-based alignment indices, strictly increasing"
    )
    distances: np.ndarray = Field(
        ...,
        description="Exact distance, or EXCEEDS_K, per reported alignment"
    )

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    @field_validator("positions", "distances", mode="before")
    @classmethod
    def _as_array(cls, value) -> np.ndarray:
        return readonly_int_array(value)

    @model_validator(mode="after")
    def _check_entries(self) -> BoundedReport:
        if self.positions.size != self.distances.size:
            raise ValueError("positions and distances differ in length")
        if self.positions.size and int(self.positions.min()) < 1:
            raise ValueError("alignments are 1-based")
        if self.positions.size > 1 and not bool((np.diff(self.positions) > 0).all()):
            raise ValueError("positions must be strictly increasing")
        exact = self.distances[self.distances != EXCEEDS_K]
        if exact.size and (int(exact.min()) < 0 or int(exact.max()) > self.k):
            raise ValueError("exact entries must lie in [0..k]")
        return self

    def __len__(self) -> int:
        return int(self.positions.size)

    def __iter__(self) -> Iterator[tuple[int, Optional[int]]]:
        for position, value in zip(self.positions.tolist(), self.distances.tolist()):
            yield position, (None if value == EXCEEDS_K else value)

    def get(self, position: int) -> Optional[int]:
        """Exact distance at `position`, or None when it exceeds k."""
        idx = int(np.searchsorted(self.positions, position))
        if idx >= len(self) or int(self.positions[idx]) != position:
            raise KeyError(position)
        value = int(self.distances[idx])
        return None if value == EXCEEDS_K else value

    def as_dict(self) -> dict[int, Optional[int]]:
        return dict(iter(self))

    def accepted(self) -> np.ndarray:
        """Alignments whose distance is at most k."""
        return self.positions[self.distances != EXCEEDS_K]

    def same_as(self, other: BoundedReport) -> bool:
        return (
            self.k == other.k
            and np.array_equal(self.positions, other.positions)
            and np.array_equal(self.distances, other.distances)
        )


# -----------------------------------------------------------------------------
# Mark vector
# -----------------------------------------------------------------------------
class MarkVector(BaseModel):
    marks: np.ndarray = Field(
        ...,
        description="Match marks per text position; marks[0] is alignment 1"
    )

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    @field_validator("marks", mode="before")
    @classmethod
    def _as_array(cls, value) -> np.ndarray:
        return readonly_int_array(value, "marks")

    def alignments(self, count: int) -> np.ndarray:
        """Marks of the first `count` alignments (the ones that fit in the text)."""
        return self.marks[:count]
