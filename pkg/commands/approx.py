import click

from commands.common import build_config, handle_errors, instance_options, load_instance
from models.run import Algorithm, Command
from services.randomized import approx_count
from utils.output import estimate_rows, write_lines


@click.command("approx")
@instance_options
@click.option("--epsilon", type=float, help="Relative error, strictly between 0 and 1")
@click.option("--alpha", type=float, help="Estimates hold with probability 1 - m^-alpha")
@click.option("--one-sided", is_flag=True, help="Never undershoot the true distance (w.h.p.)")
@handle_errors
def approx(**params):
    """(1 +- epsilon) estimates of every alignment's Hamming distance."""
    config = build_config(Command.APPROX, algorithm=Algorithm.APPROX, **params)
    text, pattern, rng = load_instance(config)
    estimates = approx_count(
        text,
        pattern,
        config.epsilon,
        alpha=config.alpha,
        rng=rng,
        one_sided=config.one_sided,
    )
    write_lines(estimate_rows(estimates), config.output)
