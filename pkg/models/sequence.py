from __future__ import annotations

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

WILDCARD_RANK = 0


def readonly_int_array(values, name: str = "values") -> np.ndarray:
    """Copy `values` into a one-dimensional, read-only int64 array."""
    arr = np.array(values, dtype=np.int64, copy=True)
    if arr.ndim != 1:
        raise ValueError(f"{name} must be one-dimensional, got shape {arr.shape}")
    arr.flags.writeable = False
    return arr


# -----------------------------------------------------------------------------
# Alphabet
# -----------------------------------------------------------------------------
class Alphabet(BaseModel):
    rank_of: dict[int, int] = Field(
        default_factory=dict,
        description="Raw byte -> rank in [1..sigma]"
    )
    byte_of: tuple[int, ...] = Field(
        default=(),
        description="byte_of[r - 1] is the raw byte holding rank r"
    )
    wildcard_byte: int = Field(
        ...,
        ge=0,
        le=255,
        description="Raw byte designated as the wild card (rank 0)"
    )

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def _check_bijection(self) -> Alphabet:
        if len(self.rank_of) != len(self.byte_of):
            raise ValueError("rank_of and byte_of must have the same size")
        for rank, raw in enumerate(self.byte_of, start=1):
            if self.rank_of.get(raw) != rank:
                raise ValueError(f"byte {raw} does not map back to rank {rank}")
        if self.wildcard_byte in self.rank_of:
            raise ValueError("the wild-card byte cannot carry a non-zero rank")
        return self

    @property
    def sigma(self) -> int:
        return len(self.byte_of)


# -----------------------------------------------------------------------------
# Sequence
# -----------------------------------------------------------------------------
class Sequence(BaseModel):
    """Rank-encoded text or pattern. Rank 0 is the wild card."""

    ranks: np.ndarray = Field(
        ...,
        description="Ranks in [0..sigma], one per symbol"
    )

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    @field_validator("ranks", mode="before")
    @classmethod
    def _as_ranks(cls, value) -> np.ndarray:
        arr = readonly_int_array(value, "ranks")
        if arr.size and int(arr.min()) < 0:
            raise ValueError("ranks must be non-negative")
        return arr

    @property
    def length(self) -> int:
        return int(self.ranks.size)

    def __len__(self) -> int:
        return self.length

    @property
    def has_wildcards(self) -> bool:
        return bool((self.ranks == WILDCARD_RANK).any())

    @property
    def max_rank(self) -> int:
        return int(self.ranks.max()) if self.ranks.size else 0
