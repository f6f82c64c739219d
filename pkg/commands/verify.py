import click

from commands.common import build_config, handle_errors, instance_options, load_instance
from models.run import VERIFIABLE_ALGORITHMS, Command
from services.dispatch import disagreements, run_algorithm
from services.naive import naive_profile
from utils.output import write_lines


@click.command("verify")
@instance_options
@click.option(
    "--algo",
    "algorithm",
    type=click.Choice([a.value for a in VERIFIABLE_ALGORITHMS]),
    required=True,
    help="Algorithm checked against the naive oracle",
)
@click.option("--k", "k", type=int, help="Mismatch threshold (k-mismatch algorithms)")
@click.option("--budget", type=float, help="Knapsack budget override")
@click.option("--alpha", type=float, help="High-probability exponent (las-vegas)")
@handle_errors
def verify(**params):
    """Run an algorithm and the naive oracle on one instance; exit 1 when they differ."""
    config = build_config(Command.VERIFY, **params)
    text, pattern, rng = load_instance(config)
    oracle = naive_profile(text, pattern)
    result = run_algorithm(
        config.algorithm,
        text,
        pattern,
        config.k,
        rng=rng,
        alpha=config.alpha,
        budget=config.budget,
    )

    differing = disagreements(config.algorithm, result, oracle, config.k)
    if not differing.size:
        write_lines([f"ok\t{config.algorithm.value}\t{len(oracle)} alignments"], config.output)
        return

    shown = ", ".join(str(p) for p in differing[:10].tolist())
    write_lines([f"mismatch\t{config.algorithm.value}\t{differing.size} alignments"], config.output)
    click.echo(f"{config.algorithm.value} differs from the oracle at alignments {shown}", err=True)
    raise click.exceptions.Exit(1)
