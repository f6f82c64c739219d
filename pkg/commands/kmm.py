import click

from commands.common import build_config, handle_errors, instance_options, load_instance, log_counters
from models.counting import WorkCounters
from models.run import KMM_ALGORITHMS, Algorithm, Command
from services.dispatch import run_algorithm
from utils.output import report_rows, write_lines


# -----------------------------------------------------------------------------
# Deterministic
# -----------------------------------------------------------------------------
@click.command("kmm")
@instance_options
@click.option(
    "--algo",
    "algorithm",
    type=click.Choice([a.value for a in KMM_ALGORITHMS]),
    default=Algorithm.KNAPSACK.value,
    show_default=True,
    help="k-mismatch algorithm",
)
@click.option("--k", "k", type=int, help="Mismatch threshold")
@click.option("--budget", type=float, help="Knapsack budget (default n * sqrt(k log k))")
@handle_errors
def kmm(**params):
    """Alignments with at most k mismatches, with their exact distance."""
    config = build_config(Command.KMM, **params)
    text, pattern, _ = load_instance(config)
    counters = WorkCounters()
    report = run_algorithm(config.algorithm, text, pattern, config.k, budget=config.budget, counters=counters)
    log_counters(counters)
    write_lines(report_rows(report), config.output)


# -----------------------------------------------------------------------------
# Las Vegas
# -----------------------------------------------------------------------------
@click.command("kmm-lv")
@instance_options
@click.option("--k", "k", type=int, help="Mismatch threshold")
@click.option("--alpha", type=float, help="High-probability exponent")
@click.option("--step-constant", type=float, help="Sampling steps per phase are this times k")
@click.option("--phase-constant", type=float, help="Sampling phases of the first stage are this times k log n")
@handle_errors
def kmm_lv(**params):
    """k-mismatches by random sampling; the output is always exact."""
    config = build_config(Command.KMM_LV, algorithm=Algorithm.LAS_VEGAS, **params)
    text, pattern, rng = load_instance(config)
    counters = WorkCounters()
    report = run_algorithm(
        Algorithm.LAS_VEGAS,
        text,
        pattern,
        config.k,
        rng=rng,
        alpha=config.alpha,
        step_constant=config.step_constant,
        phase_constant=config.phase_constant,
        counters=counters,
    )
    log_counters(counters)
    write_lines(report_rows(report), config.output)
