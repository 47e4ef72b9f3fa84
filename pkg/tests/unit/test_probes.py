"""Tests for the numerical probes."""

import math

import pytest

from src.cli.probes import PROBES, ProbeContext, ProbeResult, ProbeStatus, run_probe
from src.cli.schemas import RunConfig
from src.core.exceptions import OutOfRangeError
from src.primes.sieve import build_sieve


def _context(sieve, **overrides) -> ProbeContext:
    config = RunConfig(limit=sieve.limit, **overrides)
    return ProbeContext(config, lambda _: sieve)


class TestProbeResult:
    def test_lines(self):
        result = ProbeResult(
            probe="demo",
            status=ProbeStatus.PASS,
            measured={"N": 10, "ratio": 0.5, "match": True},
            claimed={"bound": 1.0},
        )
        assert result.lines() == [
            "probe=demo status=PASS",
            "N=10",
            "ratio=0.5",
            "match=true",
            "bound=1",
        ]


class TestProbes:
    """Each registered probe on a small sieve."""

    def test_registry(self):
        assert sorted(PROBES) == [
            "lattice",
            "lemma2",
            "lemma3",
            "lemma4",
            "minor",
            "orthogonality",
            "page",
            "pnt",
        ]

    def test_unknown(self, small_sieve):
        with pytest.raises(OutOfRangeError):
            run_probe("lemma9", _context(small_sieve))

    def test_sieve_built_lazily(self, small_sieve):
        calls = []

        def factory(config):
            calls.append(config.limit)
            return small_sieve

        ctx = ProbeContext(RunConfig(limit=100), factory)
        run_probe("lattice", ctx)
        assert calls == []
        assert ctx.sieve is ctx.sieve
        assert calls == [100]

    def test_orthogonality(self, small_sieve):
        result = run_probe("orthogonality", _context(small_sieve, n=1000))
        assert result.status is ProbeStatus.PASS
        assert result.measured["M"] == 2048
        assert result.measured["match"] is True
        assert not result.hard_failure

    def test_orthogonality_mismatch(self, small_sieve, mocker):
        mocker.patch("src.cli.probes.rep_count_via_orthogonality", return_value=-1)
        result = run_probe("orthogonality", _context(small_sieve, n=100))
        assert result.status is ProbeStatus.FAIL
        assert result.hard_failure

    def test_lemma2(self, small_sieve):
        result = run_probe("lemma2", _context(small_sieve, n=1000))
        assert result.status is ProbeStatus.REPORT
        assert result.measured["points"] == 26
        assert math.isfinite(result.measured["max_ratio"])

    def test_lemma3(self, small_sieve):
        result = run_probe("lemma3", _context(small_sieve))
        assert result.status is ProbeStatus.PASS
        assert result.measured["N"] == 10_000
        assert result.measured["deviation"] < result.claimed["deviation_bound"]
        assert result.measured["main_term_ratio"] == pytest.approx(1.0, abs=0.05)

    def test_lemma4(self, small_sieve):
        result = run_probe("lemma4", _context(small_sieve))
        assert result.status is ProbeStatus.REPORT
        assert result.measured["grid"] == 1024
        assert result.measured["estimate"] > 0

    def test_pnt(self, small_sieve):
        result = run_probe("pnt", _context(small_sieve))
        assert result.status is ProbeStatus.PASS
        assert result.measured["deviation_1000"] == pytest.approx(0.1605, abs=5e-4)
        assert result.measured["strictly_decreasing"] is True

    def test_pnt_needs_thousand(self):
        with pytest.raises(OutOfRangeError):
            run_probe("pnt", _context(build_sieve(500)))

    def test_page_reports_worst_residue(self, small_sieve):
        result = run_probe("page", _context(small_sieve, n=10_000))
        assert result.status in (ProbeStatus.PASS, ProbeStatus.FAIL)
        assert 1 <= result.measured["worst_q"] <= 20
        assert math.gcd(result.measured["worst_q"], result.measured["worst_a"]) == 1

    @pytest.mark.slow
    def test_page_at_million(self, sieve_1e6):
        result = run_probe("page", _context(sieve_1e6))
        assert result.status is ProbeStatus.PASS

    def test_minor(self, small_sieve):
        result = run_probe("minor", _context(small_sieve, n=10_000, samples=5))
        assert result.status is ProbeStatus.REPORT
        assert result.measured["samples"] <= 5

    def test_lattice(self, small_sieve):
        result = run_probe("lattice", _context(small_sieve, n=10))
        assert result.measured["exact"] == 5
        assert result.claimed["printed"] == pytest.approx(5.6)
