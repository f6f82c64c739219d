from __future__ import annotations

import logging
from pathlib import Path
from typing import Optional

import numpy as np

from models.run import CorpusFormat
from models.sequence import WILDCARD_RANK, Alphabet, Sequence
from services.alphabet import encode
from utils.errors import CorpusError, EmptyProfileError, InvalidInputError
from utils.rng import SeededRng

logger = logging.getLogger(__name__)


def parse_payload(raw: bytes, fmt: CorpusFormat) -> bytes:
    """Sequence bytes of a plain or FASTA payload, line terminators dropped."""
    if fmt == CorpusFormat.FASTA:
        lines = (line.rstrip(b"\r") for line in raw.split(b"\n"))
        return b"".join(line for line in lines if not line.startswith(b">"))
    return raw.replace(b"\r", b"").replace(b"\n", b"")


def read_payload(path: Path, fmt: CorpusFormat = CorpusFormat.PLAIN) -> bytes:
    try:
        raw = Path(path).read_bytes()
    except OSError as e:
        raise CorpusError(f"cannot read {path}: {e.strerror or e}") from e
    payload = parse_payload(raw, fmt)
    if not payload:
        raise InvalidInputError(f"{path} holds no sequence data")
    logger.info("read %d symbols from %s (%s)", len(payload), path, fmt.value)
    return payload


def ingest(
    path: Path,
    fmt: CorpusFormat,
    wildcard_byte: int | bytes | str,
    alphabet: Optional[Alphabet] = None,
) -> tuple[Sequence, Alphabet]:
    return encode(read_payload(path, fmt), wildcard_byte, alphabet)


def extract_offset(n: int, m: int, rng: SeededRng) -> int:
    """Uniform 1-based start of a length-m substring of a length-n text."""
    if not 1 <= m <= n:
        raise EmptyProfileError(n, m)
    return int(rng.integers(0, n - m + 1)) + 1


def extract_pattern(text: Sequence, m: int, rng: SeededRng) -> Sequence:
    """A uniformly chosen length-m substring of the text."""
    start = extract_offset(text.length, m, rng) - 1
    return Sequence(ranks=text.ranks[start:start + m])


def random_text(
    n: int,
    sigma: int,
    rng: SeededRng,
    wildcard_density: float = 0.0,
) -> Sequence:
    """Uniform text over ranks [1..sigma], each position wild with the given probability."""
    if n < 1 or sigma < 1:
        raise InvalidInputError("random_text needs n >= 1 and sigma >= 1")
    if not 0.0 <= wildcard_density <= 1.0:
        raise InvalidInputError(f"wild-card density must lie in [0, 1], got {wildcard_density}")
    ranks = np.asarray(rng.integers(1, sigma + 1, size=n), dtype=np.int64)
    if wildcard_density:
        ranks[rng.random(n) < wildcard_density] = WILDCARD_RANK
    return Sequence(ranks=ranks)
