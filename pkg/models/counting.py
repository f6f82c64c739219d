from __future__ import annotations

from typing import Mapping, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from models.sequence import WILDCARD_RANK, Sequence


# -----------------------------------------------------------------------------
# Position table
# -----------------------------------------------------------------------------
class PositionTable(BaseModel):
    pos: dict[int, tuple[int, ...]] = Field(
        default_factory=dict,
        description="Rank -> ascending 1-based pattern positions holding it (wild cards excluded)"
    )

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def _check_positions(self) -> PositionTable:
        for rank, positions in self.pos.items():
            if rank == WILDCARD_RANK:
                raise ValueError("the wild card has no position list")
            if any(b <= a for a, b in zip(positions, positions[1:])):
                raise ValueError(f"positions of rank {rank} must be strictly increasing")
        return self

    @classmethod
    def build(cls, pattern: Sequence) -> PositionTable:
        table: dict[int, list[int]] = {}
        for j, rank in enumerate(pattern.ranks.tolist(), start=1):
            if rank != WILDCARD_RANK:
                table.setdefault(rank, []).append(j)
        return cls(pos={rank: tuple(positions) for rank, positions in sorted(table.items())})

    @property
    def ranks(self) -> list[int]:
        return sorted(self.pos)

    def freq(self, rank: int) -> int:
        return len(self.pos.get(rank, ()))

    def frequencies(self) -> dict[int, int]:
        return {rank: len(positions) for rank, positions in self.pos.items()}

    @property
    def g(self) -> int:
        """Number of non-wild-card pattern positions."""
        return sum(len(positions) for positions in self.pos.values())

    def by_frequency(self) -> list[int]:
        """Ranks from most to least frequent, ties by ascending rank."""
        return sorted(self.pos, key=lambda rank: (-len(self.pos[rank]), rank))

    def restricted(self, picked: Mapping[int, int]) -> PositionTable:
        """Keep, for each picked rank, only its first `picked[rank]` positions."""
        return PositionTable(pos={
            rank: self.pos[rank][:count]
            for rank, count in sorted(picked.items())
            if count > 0 and rank in self.pos
        })


# -----------------------------------------------------------------------------
# Knapsack plan
# -----------------------------------------------------------------------------
class KnapsackPlan(BaseModel):
    picked: dict[int, int] = Field(
        default_factory=dict,
        description="Rank -> number of its pattern instances in the knapsack, in greedy order"
    )
    size: int = Field(0, ge=0, description="s: total instances picked")
    cost: int = Field(0, ge=0, description="c: sum of picked instances times text frequency")
    budget: float = Field(..., description="B: cost ceiling checked before each addition")
    capacity: int = Field(..., ge=0, description="2k: knapsack size")
    filled: bool = Field(False, description="True when size == capacity")

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def _check_plan(self) -> KnapsackPlan:
        if self.size != sum(self.picked.values()):
            raise ValueError("size must equal the number of picked instances")
        if self.size > self.capacity:
            raise ValueError("the knapsack cannot hold more than 2k instances")
        if self.filled != (self.size == self.capacity):
            raise ValueError("filled must be equivalent to size == 2k")
        return self

    def fully_picked(self, table: PositionTable) -> list[int]:
        return [rank for rank, count in self.picked.items() if count == table.freq(rank)]


# -----------------------------------------------------------------------------
# Work counters
# -----------------------------------------------------------------------------
class WorkCounters(BaseModel):
    """Instrumentation accumulated while an algorithm runs."""

    marks_created: int = Field(0, ge=0)
    convolutions_run: int = Field(0, ge=0)
    lce_queries: int = Field(0, ge=0)
    segments: int = Field(0, ge=0, description="Text segments scanned by the subset algorithm")
    candidates: int = Field(0, ge=0, description="Alignments passing the knapsack mark filter")
    knapsack_case: Optional[int] = Field(None, description="1 when the knapsack was filled, else 2")


def text_frequencies(text: Sequence, sigma: Optional[int] = None) -> dict[int, int]:
    """F: rank -> occurrences in the text (wild cards excluded)."""
    size = max(text.max_rank, sigma or 0) + 1
    counts = np.bincount(text.ranks, minlength=size)
    return {rank: int(count) for rank, count in enumerate(counts.tolist()) if rank and count}
