from __future__ import annotations

import logging
from typing import Optional

import numpy as np

from models.sequence import WILDCARD_RANK, Alphabet, Sequence
from utils.errors import InvalidInputError

logger = logging.getLogger(__name__)


def as_byte(value: int | bytes | str) -> int:
    if isinstance(value, int):
        if not 0 <= value <= 255:
            raise InvalidInputError(f"byte value out of range: {value}")
        return value
    raw = value.encode("latin-1") if isinstance(value, str) else bytes(value)
    if len(raw) != 1:
        raise InvalidInputError(f"expected a single byte, got {value!r}")
    return raw[0]


def encode(
    raw: bytes,
    wildcard_byte: int | bytes | str,
    alphabet: Optional[Alphabet] = None,
) -> tuple[Sequence, Alphabet]:
    """
    Rank-encode `raw`. Ranks follow first occurrence starting at 1; the
    wild-card byte becomes 0. Passing the alphabet of a previously encoded
    string extends it, so text and pattern ranks agree.
    """
    if not raw:
        raise InvalidInputError("cannot encode an empty byte string")
    wildcard = as_byte(wildcard_byte)
    if alphabet is not None and alphabet.wildcard_byte != wildcard:
        raise InvalidInputError(
            f"alphabet wild card {alphabet.wildcard_byte!r} differs from {wildcard!r}"
        )

    rank_of = dict(alphabet.rank_of) if alphabet else {}
    byte_of = list(alphabet.byte_of) if alphabet else []

    data = np.frombuffer(bytes(raw), dtype=np.uint8)
    values, first = np.unique(data, return_index=True)
    for value in values[np.argsort(first, kind="stable")].tolist():
        if value == wildcard or value in rank_of:
            continue
        byte_of.append(value)
        rank_of[value] = len(byte_of)

    lookup = np.zeros(256, dtype=np.int64)
    for value, rank in rank_of.items():
        lookup[value] = rank
    lookup[wildcard] = WILDCARD_RANK

    extended = Alphabet(rank_of=rank_of, byte_of=tuple(byte_of), wildcard_byte=wildcard)
    logger.debug("encoded %d bytes over sigma=%d", data.size, extended.sigma)
    return Sequence(ranks=lookup[data]), extended


def decode(sequence: Sequence, alphabet: Alphabet) -> bytes:
    """Inverse of `encode`: rank 0 turns back into the wild-card byte."""
    if sequence.max_rank > alphabet.sigma:
        raise InvalidInputError(
            f"rank {sequence.max_rank} is outside the alphabet (sigma={alphabet.sigma})"
        )
    lookup = np.array((alphabet.wildcard_byte,) + alphabet.byte_of, dtype=np.uint8)
    return lookup[sequence.ranks].tobytes()
