import click

from commands.common import build_config, handle_errors, instance_options, load_instance, log_counters
from models.counting import WorkCounters
from models.run import PROFILE_ALGORITHMS, Algorithm, Command
from services.dispatch import run_algorithm
from utils.output import profile_rows, write_lines


@click.command("count")
@instance_options
@click.option(
    "--algo",
    "algorithm",
    type=click.Choice([a.value for a in PROFILE_ALGORITHMS]),
    default=Algorithm.NAIVE.value,
    show_default=True,
    help="Profile algorithm",
)
@handle_errors
def count(**params):
    """Exact Hamming distance of every alignment."""
    config = build_config(Command.COUNT, **params)
    text, pattern, _ = load_instance(config)
    counters = WorkCounters()
    profile = run_algorithm(config.algorithm, text, pattern, counters=counters)
    log_counters(counters)
    write_lines(profile_rows(profile), config.output)
