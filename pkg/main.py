from __future__ import annotations

from typing import Optional

import click

from commands import approx, bench, count, kmm, verify
from config.logging import configure_logging
from config.settings import settings

__version__ = "0.1.0"


@click.group(
    help="Pattern matching with mismatches: exact profiles, k-mismatch search, estimates and benchmarks.",
    context_settings={"help_option_names": ["-h", "--help"]},
)
@click.option(
    "--log-level",
    default=None,
    help="Root log level (defaults to the LOG_LEVEL setting)",
)
@click.version_option(
    __version__,
    prog_name="mismatch-toolkit",
    message=f"%(prog)s %(version)s ({settings.ENVIRONMENT})",
)
def cli(log_level: Optional[str]) -> None:
    configure_logging(log_level or settings.LOG_LEVEL)


# -----------------------------------------------------------------------------
# Commands
# -----------------------------------------------------------------------------
cli.add_command(count.count)
cli.add_command(kmm.kmm)
cli.add_command(kmm.kmm_lv)
cli.add_command(approx.approx)
cli.add_command(verify.verify)
cli.add_command(bench.bench)


# -----------------------------------------------------------------------------
# Entrypoint for `python main.py`
# -----------------------------------------------------------------------------
if __name__ == "__main__":
    cli()
