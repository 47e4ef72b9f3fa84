"""Subcommand implementations. Data goes to standard output, diagnostics to standard error."""

import sys

from src.circle.arcs import ArcParams, dissect_arcs, major_measure, minor_intervals
from src.cli.compare import build_rows, summarize
from src.cli.output import format_float, render, render_json
from src.cli.probes import ProbeContext, run_probe
from src.cli.schemas import HEADLINE_COLUMNS, VERBOSE_COLUMNS, RunConfig
from src.core.exceptions import OddInputError, OutOfRangeError
from src.goldbach.convolution import count_range
from src.goldbach.counting import (
    PAIR_LISTING_LIMIT,
    GoldbachCount,
    find_counterexamples,
    goldbach_pairs,
)
from src.primes.cache import load_sieve, save_sieve
from src.primes.counting import prime_count
from src.primes.sieve import PrimeSieve, build_sieve
from src.series.base import ALL_VARIANTS
from src.series.variants import claimed_bounds, evaluate_variant
from src.utils.hashing import table_digest
from src.utils.logging import get_logger

logger = get_logger(__name__)

COUNT_COLUMNS = ("N", "ordered", "unordered")
ARC_COLUMNS = ("a", "q", "class", "center", "halfwidth")


def obtain_sieve(config: RunConfig) -> PrimeSieve:
    """Load the cached sieve when it covers ``limit``, otherwise sieve afresh."""
    if config.cache is not None and config.cache.exists():
        sieve = load_sieve(config.cache)
        if sieve.limit >= config.limit:
            return sieve
        logger.info("sieve_cache_too_short", cached=sieve.limit, limit=config.limit)
    return build_sieve(config.limit)


def _selected_counts(sieve: PrimeSieve, config: RunConfig) -> list[GoldbachCount]:
    wanted = set(config.n_values)
    counts = count_range(sieve, config.n_max, workers=config.workers, seed=config.seed)
    return [count for count in counts if count.N in wanted]


def _require_even_n(config: RunConfig, default: int | None = None) -> int:
    N = config.n if config.n is not None else default
    if N is None:
        raise OutOfRangeError("n", None, "--n is required for this command")
    if N % 2:
        raise OddInputError("N", N)
    return N


def cmd_sieve(config: RunConfig) -> int:
    """Build or load the sieve, write the cache when asked, print pi(limit)."""
    sieve: PrimeSieve | None = None
    if config.cache is not None and config.cache.exists():
        sieve = load_sieve(config.cache)
        if sieve.limit != config.limit:
            sieve = None
    if sieve is None:
        sieve = build_sieve(config.limit)
        if config.cache is not None:
            save_sieve(sieve, config.cache)
    print(prime_count(sieve, config.limit))
    return 0


def cmd_count(config: RunConfig) -> int:
    """Exact counts for the configured range; N without representation go to stderr."""
    sieve = obtain_sieve(config)
    counts = _selected_counts(sieve, config)

    columns: tuple[str, ...] = COUNT_COLUMNS + (("pairs",) if config.pairs else ())
    rows = []
    for count in counts:
        row: dict[str, int | float | str | None] = {
            "N": count.N,
            "ordered": count.ordered,
            "unordered": count.unordered,
        }
        if config.pairs:
            row["pairs"] = (
                " ".join(f"{p}+{q}" for p, q in goldbach_pairs(sieve, count.N))
                if count.N <= PAIR_LISTING_LIMIT
                else None
            )
        rows.append(row)
    sys.stdout.write(render(rows, columns, config.output_format))

    for N in find_counterexamples(counts):
        logger.warning("falsifying_event", N=N)
        print(f"falsifying event: N={N} has no representation", file=sys.stderr)
    return 0


def cmd_compare(config: RunConfig) -> int:
    """Comparison table on stdout, ratio summary on stderr."""
    sieve = obtain_sieve(config)
    counts = _selected_counts(sieve, config)
    rows = build_rows(
        sieve,
        counts,
        config.series_variants,
        config.trunc_p,
        config.trunc_q,
        verbose=config.verbose,
        tol=config.tol,
    )
    columns = VERBOSE_COLUMNS if config.verbose else HEADLINE_COLUMNS
    text = render([row.model_dump() for row in rows], columns, config.output_format)
    sys.stdout.write(text)
    logger.info("comparison_written", rows=len(rows), sha256=table_digest(text))

    for item in summarize(rows):
        stats = " ".join(
            f"{key}={format_float(float(item[key]))}" for key in ("mean", "median", "max")
        )
        print(
            f"summary variant={item['variant']} column={item['column']} "
            f"count={item['count']} {stats}",
            file=sys.stderr,
        )
    return 0


def cmd_series(config: RunConfig) -> int:
    """Every variant at --n, both coefficient modes included."""
    N = _require_even_n(config)
    sieve = obtain_sieve(config)
    for variant in ALL_VARIANTS:
        value = evaluate_variant(sieve, N, variant, config.trunc_p, config.trunc_q)
        claims = claimed_bounds(value)
        print(
            f"{variant.label} N={N} value={value.value!r} truncation={value.truncation} "
            f"tail={value.tail_note!r} S>1={claims['S>1']} S>2={claims['S>2']}"
        )
    return 0


def cmd_arcs(config: RunConfig) -> int:
    """Arc and minor-gap counts with the major measure at --n; --list-arcs adds the arcs."""
    N = _require_even_n(config, config.n_max)
    params = ArcParams.from_n(N, config.tau_c)
    arcs = dissect_arcs(params)
    print(
        f"N={N} c={params.c!r} tau={format_float(params.tau)} q_max={params.q_max} "
        f"arcs={len(arcs)} minor_gaps={len(minor_intervals(params, arcs))} "
        f"major_measure={format_float(major_measure(params))}"
    )
    if config.list_arcs:
        sys.stdout.write(render_json([arc.to_dict() for arc in arcs], ARC_COLUMNS))
    return 0


def cmd_probe(config: RunConfig, which: str) -> int:
    """Run one probe; only hard failures change the exit status."""
    result = run_probe(which, ProbeContext(config, obtain_sieve))
    for line in result.lines():
        print(line)
    return 1 if result.hard_failure else 0
