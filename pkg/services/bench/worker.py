from __future__ import annotations

import logging
import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterator, Optional

from numpy.random import SeedSequence

from models.bench import BenchCell, BenchRecord, BenchStatus
from models.counting import WorkCounters, text_frequencies
from models.run import Algorithm, BenchConfig
from models.sequence import Sequence
from services.corpus import extract_pattern, ingest, random_text
from services.dispatch import run_algorithm
from utils.rng import SeededRng

logger = logging.getLogger(__name__)

# Stream tags keep the three kinds of randomness of a grid apart
_TEXT_STREAM, _PATTERN_STREAM, _ALGORITHM_STREAM = 0, 1, 2


@dataclass
class BenchJob:
    """A cell together with the inputs it is timed on; pattern is None when m > n."""

    cell: BenchCell
    text: Sequence
    pattern: Optional[Sequence]
    rng: SeededRng


def _stream(seed: int, *key: int) -> SeededRng:
    return SeededRng(SeedSequence(seed, spawn_key=key))


def _sources(config: BenchConfig) -> Iterator[tuple[Sequence, int | None]]:
    if config.text is not None:
        text, _ = ingest(config.text, config.text_format, config.wildcard_byte)
        yield text, None
        return
    for s, sigma in enumerate(config.sigmas):
        yield random_text(max(config.ns), sigma, _stream(config.seed, _TEXT_STREAM, s)), sigma


def build_jobs(config: BenchConfig) -> list[BenchJob]:
    """Every grid cell in output order: source, n, m, k, algorithm."""
    jobs: list[BenchJob] = []
    for s, (source, sigma) in enumerate(_sources(config)):
        for ni, n in enumerate(config.ns):
            text = Sequence(ranks=source.ranks[:n])
            for mi, m in enumerate(config.ms):
                pattern = None
                if m <= text.length:
                    pattern = extract_pattern(text, m, _stream(config.seed, _PATTERN_STREAM, s, ni, mi))
                for ki, k in enumerate(config.ks):
                    for algorithm in config.algorithms:
                        cell = BenchCell(
                            algorithm=algorithm.value,
                            n=text.length,
                            m=m,
                            k=k,
                            sigma=sigma,
                            seed=config.seed,
                        )
                        rng = _stream(config.seed, _ALGORITHM_STREAM, s, ni, mi, ki)
                        jobs.append(BenchJob(cell, text, pattern, rng))
    return jobs


# Worker for one bench cell
def process_bench_cell(job: BenchJob) -> BenchRecord:
    """Time one algorithm call; a failure is kept as a row with ms = nan."""
    cell = job.cell
    counters = WorkCounters()
    sigma = cell.sigma if cell.sigma is not None else len(text_frequencies(job.text))
    elapsed = math.nan

    try:
        cell.status = BenchStatus.RUNNING
        if job.pattern is None:
            raise ValueError(f"pattern length {cell.m} exceeds text length {cell.n}")

        start = time.perf_counter()
        run_algorithm(Algorithm(cell.algorithm), job.text, job.pattern, cell.k, rng=job.rng, counters=counters)
        elapsed = (time.perf_counter() - start) * 1000.0

        cell.status = BenchStatus.COMPLETED
        logger.info("bench %s n=%d m=%d k=%d: %.3f ms", cell.algorithm, cell.n, cell.m, cell.k, elapsed)

    except Exception as e:
        cell.status = BenchStatus.FAILED
        cell.error_message = str(e)
        logger.warning("bench %s n=%d m=%d k=%d failed: %s", cell.algorithm, cell.n, cell.m, cell.k, e)

    return BenchRecord(
        algorithm=cell.algorithm,
        n=cell.n,
        m=cell.m,
        k=cell.k,
        sigma=sigma,
        seed=cell.seed,
        ms=elapsed,
        marks=counters.marks_created,
        convs=counters.convolutions_run,
        lce=counters.lce_queries,
    )


def run_grid(config: BenchConfig) -> list[BenchRecord]:
    """All records in grid order, whatever order the cells finish in."""
    jobs = build_jobs(config)
    logger.info("bench grid: %d cells on %d worker(s)", len(jobs), config.jobs)
    if config.jobs == 1:
        return [process_bench_cell(job) for job in jobs]
    with ThreadPoolExecutor(max_workers=config.jobs) as pool:
        return list(pool.map(process_bench_cell, jobs))
