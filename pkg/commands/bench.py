from pathlib import Path

import click

from commands.common import handle_errors, seed_option
from models.run import Algorithm, BenchConfig, CorpusFormat
from services.bench.worker import run_grid
from utils.output import write_bench

BENCH_ALGORITHMS = [a.value for a in Algorithm if a != Algorithm.APPROX]


@click.command("bench")
@click.option("--text", type=click.Path(path_type=Path, dir_okay=False),
              help="Corpus file, truncated to each --n")
@click.option("--format", "text_format", type=click.Choice([f.value for f in CorpusFormat]),
              default=CorpusFormat.PLAIN.value, show_default=True)
@click.option("--n", "ns", type=int, multiple=True, help="Text length (repeatable)")
@click.option("--m", "ms", type=int, multiple=True, help="Pattern length (repeatable)")
@click.option("--k", "ks", type=int, multiple=True, help="Mismatch threshold (repeatable)")
@click.option("--sigma", "sigmas", type=int, multiple=True,
              help="Alphabet size of a synthetic uniform text (repeatable, instead of --text)")
@click.option("--algo", "algorithms", type=click.Choice(BENCH_ALGORITHMS), multiple=True,
              help="Algorithm to time (repeatable)")
@seed_option
@click.option("--wildcard", help="Byte standing for the wild card")
@click.option("--jobs", type=int, help="Cells run concurrently")
@click.option("--output", "-o", type=click.Path(path_type=Path, dir_okay=False),
              help="CSV file (stdout when absent)")
@handle_errors
def bench(**params):
    """Time algorithms over an n x m x k grid, one CSV row per cell."""
    config = BenchConfig(**{key: value for key, value in params.items() if value not in (None, ())})
    write_bench(run_grid(config), config.output)
