from __future__ import annotations
from enum import Enum as PyEnum
from pathlib import Path
from typing import Optional, List

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from config.settings import settings

# -----------------------------------------------------------------------------
# Enums
# -----------------------------------------------------------------------------
class Command(PyEnum):
    """Single-instance sub-commands"""
    COUNT = "count"             # exact distance profile
    KMM = "kmm"                 # deterministic k-mismatches
    KMM_LV = "kmm-lv"           # Las Vegas k-mismatches
    APPROX = "approx"           # (1 +- eps) estimates
    VERIFY = "verify"           # algorithm vs naive oracle

class CorpusFormat(PyEnum):
    """Layout of an input file"""
    PLAIN = "plain"             # raw bytes, line terminators dropped
    FASTA = "fasta"             # '>' headers dropped, sequence lines joined

class Algorithm(PyEnum):
    """Every algorithm the command line can dispatch to"""
    NAIVE = "naive"
    ABRAHAMSON = "abrahamson"
    WILDCARD = "wildcard"
    SUBSET = "subset"
    KNAPSACK = "knapsack"
    LAS_VEGAS = "las-vegas"
    APPROX = "approx"

PROFILE_ALGORITHMS = (Algorithm.NAIVE, Algorithm.ABRAHAMSON, Algorithm.WILDCARD)
KMM_ALGORITHMS = (Algorithm.SUBSET, Algorithm.KNAPSACK)
THRESHOLD_ALGORITHMS = (Algorithm.SUBSET, Algorithm.KNAPSACK, Algorithm.LAS_VEGAS)
VERIFIABLE_ALGORITHMS = PROFILE_ALGORITHMS + THRESHOLD_ALGORITHMS


def _single_byte(value: str) -> str:
    if len(value.encode("latin-1", errors="strict")) != 1:
        raise ValueError("the wild card must be a single byte")
    return value

# -----------------------------------------------------------------------------
# Pydantic Schemas
# -----------------------------------------------------------------------------
class RunConfig(BaseModel):
    command: Command = Field(
        ...,
        description="Sub-command being run"
    )
    text: Path = Field(
        ...,
        description="Text corpus file"
    )
    text_format: CorpusFormat = Field(
        CorpusFormat.PLAIN,
        description="Format of the text (and pattern) files"
    )
    pattern_path: Optional[Path] = Field(
        None,
        description="Pattern read from a file"
    )
    pattern_literal: Optional[str] = Field(
        None,
        description="Pattern given on the command line"
    )
    pattern_length: Optional[int] = Field(
        None,
        ge=1,
        description="Extract a random pattern of this length from the text"
    )
    algorithm: Optional[Algorithm] = Field(
        None,
        description="Algorithm selector"
    )
    k: Optional[int] = Field(
        None,
        ge=1,
        description="Mismatch threshold"
    )
    epsilon: Optional[float] = Field(
        None,
        description="Relative error of the estimates"
    )
    alpha: float = Field(
        settings.DEFAULT_ALPHA,
        gt=0,
        description="High-probability exponent"
    )
    one_sided: bool = Field(
        False,
        description="Scale estimates so that they never undershoot w.h.p."
    )
    seed: int = Field(
        settings.DEFAULT_SEED,
        ge=0,
        description="Root seed of every random choice"
    )
    wildcard: str = Field(
        settings.DEFAULT_WILDCARD,
        description="Byte standing for the wild card"
    )
    budget: Optional[float] = Field(
        None,
        gt=0,
        description="Knapsack budget override"
    )
    step_constant: Optional[float] = Field(
        None,
        gt=0,
        description="Las Vegas per-phase step constant override"
    )
    phase_constant: Optional[float] = Field(
        None,
        gt=0,
        description="Isolation-stage phase constant override"
    )
    output: Optional[Path] = Field(
        None,
        description="Output file; stdout when absent"
    )

    model_config = ConfigDict(frozen=True)

    @field_validator("wildcard")
    @classmethod
    def _check_wildcard(cls, value: str) -> str:
        return _single_byte(value)

    @field_validator("pattern_literal")
    @classmethod
    def _check_literal(cls, value: Optional[str]) -> Optional[str]:
        if value is not None:
            try:
                value.encode("latin-1")
            except UnicodeEncodeError:
                raise ValueError("--pattern-literal must be one byte per character (latin-1)") from None
        return value

    @model_validator(mode="after")
    def _check_combination(self) -> RunConfig:
        sources = [self.pattern_path, self.pattern_literal, self.pattern_length]
        if sum(source is not None for source in sources) != 1:
            raise ValueError(
                "exactly one pattern source is required: --pattern, --pattern-literal or --pattern-length"
            )
        needs_k = self.command in (Command.KMM, Command.KMM_LV) or (
            self.command == Command.VERIFY and self.algorithm in THRESHOLD_ALGORITHMS
        )
        if needs_k and self.k is None:
            raise ValueError(f"--k is required for {self.command.value}")
        if self.command == Command.APPROX:
            if self.epsilon is None or not 0 < self.epsilon < 1:
                raise ValueError("--epsilon must lie strictly between 0 and 1")
        if self.command == Command.COUNT and self.algorithm not in PROFILE_ALGORITHMS:
            raise ValueError("count supports naive, abrahamson and wildcard")
        if self.command == Command.KMM and self.algorithm not in KMM_ALGORITHMS:
            raise ValueError("kmm supports subset and knapsack")
        if self.command == Command.VERIFY and self.algorithm not in VERIFIABLE_ALGORITHMS:
            raise ValueError("verify supports " + ", ".join(a.value for a in VERIFIABLE_ALGORITHMS))
        return self

    @property
    def wildcard_byte(self) -> int:
        return self.wildcard.encode("latin-1")[0]

    @property
    def literal_bytes(self) -> bytes:
        return self.pattern_literal.encode("latin-1")


class BenchConfig(BaseModel):
    text: Optional[Path] = Field(
        None,
        description="Corpus file; synthetic uniform texts are generated when absent"
    )
    text_format: CorpusFormat = Field(
        CorpusFormat.PLAIN,
        description="Format of the corpus file"
    )
    ns: List[int] = Field(
        ...,
        min_length=1,
        description="Text lengths (truncation thresholds)"
    )
    ms: List[int] = Field(
        ...,
        min_length=1,
        description="Pattern lengths"
    )
    ks: List[int] = Field(
        ...,
        min_length=1,
        description="Mismatch thresholds"
    )
    sigmas: List[int] = Field(
        default_factory=list,
        description="Alphabet sizes of synthetic texts"
    )
    algorithms: List[Algorithm] = Field(
        ...,
        min_length=1,
        description="Algorithms to time"
    )
    seed: int = Field(
        settings.DEFAULT_SEED,
        ge=0,
        description="Root seed; each cell gets its own sub-stream"
    )
    wildcard: str = Field(
        settings.DEFAULT_WILDCARD,
        description="Byte standing for the wild card"
    )
    jobs: int = Field(
        1,
        ge=1,
        description="Cells run concurrently"
    )
    output: Optional[Path] = Field(
        None,
        description="CSV output file; stdout when absent"
    )

    model_config = ConfigDict(frozen=True)

    @field_validator("wildcard")
    @classmethod
    def _check_wildcard(cls, value: str) -> str:
        return _single_byte(value)

    @field_validator("ns", "ms", "ks", "sigmas")
    @classmethod
    def _positive(cls, values: List[int]) -> List[int]:
        if any(value < 1 for value in values):
            raise ValueError("grid values must be positive")
        return values

    @model_validator(mode="after")
    def _check_source(self) -> BenchConfig:
        if self.text is None and not self.sigmas:
            raise ValueError("bench needs --text or at least one --sigma")
        if self.text is not None and self.sigmas:
            raise ValueError("--sigma generates synthetic texts and cannot be combined with --text")
        if any(a == Algorithm.APPROX for a in self.algorithms):
            raise ValueError("approx is not part of the k-mismatch bench")
        return self

    @property
    def wildcard_byte(self) -> int:
        return self.wildcard.encode("latin-1")[0]
