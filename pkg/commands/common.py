from __future__ import annotations

import functools
import logging
from pathlib import Path
from typing import Callable

import click
from pydantic import ValidationError

from models.counting import WorkCounters
from models.run import Command, CorpusFormat, RunConfig
from models.sequence import Sequence
from services.alphabet import encode
from services.corpus import extract_pattern, ingest, read_payload
from utils.errors import MismatchError
from utils.rng import SeededRng

logger = logging.getLogger(__name__)


class InputFailure(click.ClickException):
    """An algorithm precondition or an input file failed."""
    exit_code = 3


def describe(error: ValidationError) -> str:
    return "; ".join(err["msg"].removeprefix("Value error, ") for err in error.errors())


def handle_errors(func: Callable) -> Callable:
    """Map configuration problems to usage errors (exit 2) and domain errors to exit 3."""
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except ValidationError as e:
            raise click.UsageError(describe(e), ctx=click.get_current_context(silent=True)) from e
        except MismatchError as e:
            raise InputFailure(str(e)) from e
    return wrapper


def seed_option(func: Callable) -> Callable:
    return click.option(
        "--seed",
        type=int,
        envvar="DEFAULT_SEED",
        show_envvar=True,
        help="Root seed of every random choice",
    )(func)


def instance_options(func: Callable) -> Callable:
    """Options naming one text/pattern instance and where its output goes."""
    options = [
        click.option("--text", type=click.Path(path_type=Path, dir_okay=False), required=True,
                     help="Text corpus file"),
        click.option("--format", "text_format", type=click.Choice([f.value for f in CorpusFormat]),
                     default=CorpusFormat.PLAIN.value, show_default=True,
                     help="Layout of the text and pattern files"),
        click.option("--pattern", "pattern_path", type=click.Path(path_type=Path, dir_okay=False),
                     help="Pattern file"),
        click.option("--pattern-literal", help="Pattern given inline"),
        click.option("--pattern-length", type=int,
                     help="Extract a random pattern of this length from the text"),
        seed_option,
        click.option("--wildcard", help="Byte standing for the wild card"),
        click.option("--output", "-o", type=click.Path(path_type=Path, dir_okay=False),
                     help="Output file (stdout when absent)"),
    ]
    for option in reversed(options):
        func = option(func)
    return func


def build_config(command: Command, **params) -> RunConfig:
    """RunConfig from click parameters; options left unset take the model defaults."""
    return RunConfig(command=command, **{key: value for key, value in params.items() if value is not None})


def load_instance(config: RunConfig) -> tuple[Sequence, Sequence, SeededRng]:
    """Text, pattern (sharing one alphabet) and the rng stream the algorithm draws from."""
    extraction_rng, algorithm_rng = SeededRng(config.seed).spawn(2)
    text, alphabet = ingest(config.text, config.text_format, config.wildcard_byte)

    if config.pattern_path is not None:
        pattern, _ = encode(read_payload(config.pattern_path, config.text_format), config.wildcard_byte, alphabet)
    elif config.pattern_literal is not None:
        pattern, _ = encode(config.literal_bytes, config.wildcard_byte, alphabet)
    else:
        pattern = extract_pattern(text, config.pattern_length, extraction_rng)

    logger.info("instance: n=%d m=%d sigma=%d", text.length, pattern.length, alphabet.sigma)
    return text, pattern, algorithm_rng


def log_counters(counters: WorkCounters) -> None:
    logger.info(
        "work: marks=%d convolutions=%d lce=%d segments=%d",
        counters.marks_created, counters.convolutions_run, counters.lce_queries, counters.segments,
    )
