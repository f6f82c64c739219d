"""Domain errors shared by every algorithm and the command line."""


class MismatchError(Exception):
    """Base class of all toolkit errors."""


class InvalidInputError(MismatchError, ValueError):
    """An algorithm precondition does not hold for the given input."""


class EmptyProfileError(InvalidInputError):
    """The pattern is longer than the text, so no alignment exists."""

    def __init__(self, n: int, m: int) -> None:
        super().__init__(f"pattern length {m} exceeds text length {n}: no alignment exists")
        self.n = n
        self.m = m


class PrecisionError(MismatchError, ArithmeticError):
    """A correlation cannot be computed exactly within the configured bounds."""


class CorpusError(MismatchError, OSError):
    """An input file could not be read."""
