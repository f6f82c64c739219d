from __future__ import annotations

import csv
from pathlib import Path
from typing import Iterable, Iterator, Optional

import click

from models.bench import BENCH_HEADER, BenchRecord
from models.profile import BoundedReport, DistanceProfile
from models.randomized import EstimateProfile


# -----------------------------------------------------------------------------
# TSV rows
# -----------------------------------------------------------------------------
def profile_rows(profile: DistanceProfile) -> Iterator[str]:
    for position, distance in zip(profile.positions.tolist(), profile.distances.tolist()):
        yield f"{position}\t{distance}"


def report_rows(report: BoundedReport) -> Iterator[str]:
    for position, distance in report:
        yield f"{position}\t{distance if distance is not None else f'>{report.k}'}"


def estimate_rows(estimates: EstimateProfile) -> Iterator[str]:
    for position, value in enumerate(estimates.h.tolist(), start=1):
        yield f"{position}\t{value:.6f}"


# -----------------------------------------------------------------------------
# Writers
# -----------------------------------------------------------------------------
def write_lines(lines: Iterable[str], output: Optional[Path] = None) -> None:
    """Newline-terminated lines to `output`, or stdout when absent."""
    with click.open_file(str(output) if output else "-", "w", encoding="utf-8") as fh:
        for line in lines:
            fh.write(line + "\n")


def write_bench(records: Iterable[BenchRecord], output: Optional[Path] = None) -> None:
    with click.open_file(str(output) if output else "-", "w", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(BENCH_HEADER)
        for record in records:
            writer.writerow(record.row())
