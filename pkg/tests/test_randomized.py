import itertools
import math

import numpy as np
import pytest

from models.randomized import MismatchLedger, Verdict
from models.sequence import Sequence
from services.naive import naive_profile
from services.randomized import (
    isolate_mismatches,
    approx_count,
    error_sums,
    las_vegas_k_mismatches,
    one_mismatch,
    open_ledger,
    phase_count,
    random_symbol_map,
    sample_project,
)
from utils.errors import InvalidInputError
from utils.rng import SeededRng

from conftest import random_instance, seq


def brute_force_verdict(t, p):
    m = len(p)
    out = []
    for i in range(len(t) - m + 1):
        wrong = [i + j + 1 for j in range(m) if t[i + j] and p[j] and t[i + j] != p[j]]
        if not wrong:
            out.append((Verdict.ZERO_MISMATCH, 0))
        elif len(wrong) == 1:
            out.append((Verdict.EXACTLY_ONE, wrong[0]))
        else:
            out.append((Verdict.OTHER, 0))
    return out


def mismatch_positions(t, p, alignment):
    i = alignment - 1
    return {i + j + 1 for j in range(len(p)) if t[i + j] and p[j] and t[i + j] != p[j]}


def de_bruijn(k: int, n: int) -> list[int]:
    """Linear de Bruijn sequence: every length-n word over range(k) occurs once."""
    a = [0] * k * n
    out: list[int] = []

    def db(t: int, p: int) -> None:
        if t > n:
            if n % p == 0:
                out.extend(a[1:p + 1])
            return
        a[t] = a[t - p]
        db(t + 1, p)
        for j in range(a[t - p] + 1, k):
            a[t] = j
            db(t + 1, t)

    db(1, 1)
    return out + out[:n - 1]


class TestOneMismatch:
    """The 1-mismatch classifier."""

    def test_single_mismatch_located(self):
        verdict = one_mismatch(seq("ac"), seq("ab"))
        assert verdict.verdict(1) == Verdict.EXACTLY_ONE
        assert verdict.positions.tolist() == [2]
        assert error_sums(seq("ac"), seq("ab")).tolist() == [6]
        assert error_sums(seq("ac"), seq("ab"), weighted=True).tolist() == [12]

    def test_identity(self):
        assert one_mismatch(seq("abcab"), seq("abcab")).verdict(1) == Verdict.ZERO_MISMATCH

    def test_two_mismatches(self):
        assert error_sums(seq("cc"), seq("ab")).tolist() == [18]
        assert one_mismatch(seq("cc"), seq("ab")).verdict(1) == Verdict.OTHER

    def test_every_window_against_every_pattern(self):
        # a de Bruijn text holds every length-m window over {wild, a, b, c} exactly once
        cases = 0
        for m in range(1, 5):
            text = de_bruijn(4, m)
            for p in itertools.product(range(4), repeat=m):
                verdict = one_mismatch(Sequence(ranks=text), Sequence(ranks=p))
                got = list(zip(verdict.kinds.tolist(), verdict.positions.tolist()))
                assert got == brute_force_verdict(text, p)
                cases += len(got)
        assert cases > 60000

    def test_short_texts(self):
        for n in range(1, 4):
            for t in itertools.product(range(3), repeat=n):
                for m in range(1, n + 1):
                    for p in itertools.product(range(3), repeat=m):
                        verdict = one_mismatch(Sequence(ranks=t), Sequence(ranks=p))
                        got = list(zip(verdict.kinds.tolist(), verdict.positions.tolist()))
                        assert got == brute_force_verdict(t, p)


class TestSampling:
    """Random projections of the pattern."""

    def test_full_sample(self):
        pattern = seq("abca?")
        assert sample_project(pattern, 5, SeededRng(3)).ranks.tolist() == pattern.ranks.tolist()

    def test_single_position_is_uniform(self):
        seen = {(1, 0): 0, (0, 2): 0}
        for seed in range(400):
            seen[tuple(sample_project(seq("ab"), 1, SeededRng(seed)).ranks.tolist())] += 1
        assert 140 < seen[(1, 0)] < 260

    def test_wildcard_pattern(self):
        assert sample_project(seq("???"), 2, SeededRng(1)).ranks.tolist() == [0, 0, 0]

    def test_size_range(self):
        with pytest.raises(InvalidInputError):
            sample_project(seq("ab"), 3, SeededRng(0))

    def test_reproducible(self):
        a = sample_project(seq("abcdefgh"), 3, SeededRng(9).child())
        b = sample_project(seq("abcdefgh"), 3, SeededRng(9).child())
        assert a.ranks.tolist() == b.ranks.tolist()


class TestLedger:
    """Residual bookkeeping of discovered mismatches."""

    def test_duplicate_discovery_ignored(self):
        ledger = MismatchLedger.open(np.array([10, 0]), k=2, m=3)
        assert ledger.record(0, 2, 4)
        assert not ledger.record(0, 2, 4)
        assert ledger.residual.tolist() == [6, 0]
        assert ledger.mismatches(1) == {2}

    def test_isolation_converges(self):
        text, pattern = seq("abcab"), seq("abc")
        ledger = open_ledger(text, pattern, 3)
        isolate_mismatches(text, pattern, 3, SeededRng(5), ledger, phase_constant=50)
        assert ledger.mismatches(2) == {2, 3, 4}
        assert ledger.residual[1] == 0

    def test_isolation_on_identity(self):
        text = seq("abcab")
        ledger = open_ledger(text, text, 1)
        isolate_mismatches(text, text, 1, SeededRng(0), ledger)
        assert ledger.found == {}
        assert ledger.residual.tolist() == [0]

    def test_isolation_phase_count(self, monkeypatch):
        calls = []
        record = lambda *args: calls.append(int((args[2].ranks != 0).sum())) or 0
        monkeypatch.setattr("services.randomized._isolate", record)
        text, pattern = seq("abababababababab"), seq("bbbb")
        ledger = open_ledger(text, pattern, 2)
        isolate_mismatches(text, pattern, 2, SeededRng(3), ledger, phase_constant=2)
        # ceil(2 * 2 * log2 16) phases of 4 // 2 positions
        assert calls == [2] * 16

    def test_ledger_soundness(self, gen):
        for _ in range(20):
            text, pattern = random_instance(gen, 80, 12, sigmas=(2, 4), wild=0.1)
            t, p = text.ranks.tolist(), pattern.ranks.tolist()
            k = int(gen.integers(1, pattern.length + 1))
            ledger = open_ledger(text, pattern, k)
            isolate_mismatches(text, pattern, k, SeededRng(int(gen.integers(1000))), ledger)
            for alignment in range(1, len(ledger) + 1):
                truth = mismatch_positions(t, p, alignment)
                found = ledger.mismatches(alignment)
                assert found <= truth
                remaining = sum(
                    (t[q - 1] - p[q - alignment]) ** 2 * t[q - 1] * p[q - alignment] for q in truth - found
                )
                assert ledger.residual[alignment - 1] == remaining


class TestLasVegas:
    """Always-correct k-mismatch reports."""

    def test_exceeding_alignments(self):
        for seed in range(5):
            report = las_vegas_k_mismatches(seq("abcab"), seq("abc"), 1, rng=seed)
            assert report.as_dict() == {1: 0, 2: None, 3: None}

    def test_identity_with_wildcards(self):
        report = las_vegas_k_mismatches(seq("ab?ca?b"), seq("a?bca?b"), 2, rng=1)
        assert report.as_dict() == {1: 0}

    def test_dense_threshold_terminates(self):
        # 2k >= m: every round still draws single-position samples
        report = las_vegas_k_mismatches(seq("ccc"), seq("abc"), 1, rng=0)
        assert report.as_dict() == {1: None}

    def test_rejects_bad_threshold(self):
        with pytest.raises(InvalidInputError):
            las_vegas_k_mismatches(seq("abc"), seq("ab"), 3)

    def test_reproducible(self, gen):
        text, pattern = random_instance(gen, 200, 16, wild=0.1)
        a = las_vegas_k_mismatches(text, pattern, 3, rng=SeededRng(11))
        b = las_vegas_k_mismatches(text, pattern, 3, rng=SeededRng(11))
        assert a.same_as(b)

    def test_sweep(self, gen):
        for _ in range(25):
            text, pattern = random_instance(gen, 200, 24, wild=0.1)
            k = int(gen.integers(1, pattern.length + 1))
            report = las_vegas_k_mismatches(text, pattern, k, rng=int(gen.integers(10**6)))
            assert report.same_as(naive_profile(text, pattern).threshold(k))

    @pytest.mark.slow
    def test_acceptance_sweep(self, gen):
        for _ in range(100):
            text, pattern = random_instance(gen, 500, 64, wild=0.1)
            k = int(gen.integers(1, pattern.length + 1))
            report = las_vegas_k_mismatches(text, pattern, k, rng=int(gen.integers(10**6)))
            assert report.same_as(naive_profile(text, pattern).threshold(k))


class TestApprox:
    """(1 +- eps) estimates."""

    def test_identity_is_zero(self):
        text = seq("abcabcabca")
        estimates = approx_count(text, seq("abca"), 0.5, rng=3)
        assert estimates.h[0] == 0
        assert estimates.h[3] == 0

    def test_wildcard_pattern_is_zero(self):
        estimates = approx_count(seq("abcab"), seq("???"), 0.5, rng=0)
        assert estimates.h.tolist() == [0.0, 0.0, 0.0]

    def test_phase_count(self):
        assert phase_count(64, 0.2, 1.0) == math.ceil(24 * math.log(64) / 0.04)
        assert approx_count(seq("abcab"), seq("ab"), 0.5, rng=0).r == phase_count(2, 0.5, 1.0)

    def test_single_pair_contribution(self):
        t, p = Sequence(ranks=[1]), Sequence(ranks=[2])
        assert error_sums(t, p).tolist() == [2]

    def test_per_phase_expectation(self):
        rng = SeededRng(2024)
        draws = 100_000
        total = 0
        for _ in range(draws):
            mapping = random_symbol_map(2, rng)
            a, b = int(mapping[1]), int(mapping[2])
            total += (a - b) ** 2 * a * b
        mean = total / draws
        # each phase adds 0 or 2 with probability 1/2: unit standard deviation
        assert abs(mean - 1) < 4 / math.sqrt(draws)

    def test_symbol_map_keeps_wildcard(self):
        mapping = random_symbol_map(5, SeededRng(0))
        assert mapping[0] == 0
        assert set(mapping[1:].tolist()) <= {1, 2}

    def test_parameter_checks(self):
        with pytest.raises(InvalidInputError):
            approx_count(seq("abc"), seq("ab"), 1.0)
        with pytest.raises(InvalidInputError):
            approx_count(seq("abc"), seq("a"), 0.5)

    @pytest.mark.slow
    def test_estimate_bound(self, gen):
        inside = upper = total = 0
        for _ in range(50):
            text, pattern = random_instance(gen, 160, 64, sigmas=(4, 20), min_m=64)
            truth = naive_profile(text, pattern).distances
            seed = int(gen.integers(10**6))
            two_sided = approx_count(text, pattern, 0.2, alpha=1.0, rng=seed).h
            one_sided = approx_count(text, pattern, 0.2, alpha=1.0, rng=seed, one_sided=True).h
            inside += int(np.sum((two_sided >= 0.8 * truth) & (two_sided <= 1.2 * truth)))
            upper += int(np.sum(one_sided >= truth))
            total += truth.size
        assert inside >= (1 - 2 / 64) * total
        assert upper >= (1 - 2 / 64) * total
