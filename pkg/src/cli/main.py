"""Command-line entry point: ``goldbach-lab <command> [options]``."""

import argparse
import sys
import time
from collections.abc import Sequence
from pathlib import Path

from pydantic import ValidationError

from src.cli.commands import cmd_arcs, cmd_compare, cmd_count, cmd_probe, cmd_series, cmd_sieve
from src.cli.probes import PROBES
from src.cli.schemas import RunConfig
from src.config import Settings, load_settings
from src.core.exceptions import DomainError, GoldbachLabError
from src.utils.logging import bind_command, configure_logging, get_logger
from src.utils.metrics import cli_command_duration_seconds, cli_commands_total, write_metrics

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", type=Path, help="env-style settings file")
    common.add_argument("--limit", type=int, help="sieve limit")
    common.add_argument("--n-min", type=int, dest="n_min", help="smallest even N")
    common.add_argument("--n-max", type=int, dest="n_max", help="largest even N")
    common.add_argument("--step", type=int, help="even step between N values")
    common.add_argument(
        "--variant",
        action="append",
        dest="variants",
        help="series variant TAG or TAG:mode (repeatable)",
    )
    common.add_argument("--mode", choices=["mu", "mu2"], help="default coefficient mode")
    common.add_argument("--trunc-p", type=int, dest="trunc_p", help="prime truncation P")
    common.add_argument("--trunc-q", type=int, dest="trunc_q", help="modulus truncation Q")
    common.add_argument("--tau-c", type=float, dest="tau_c", help="tau exponent c")
    common.add_argument(
        "--format", choices=["csv", "json"], dest="output_format", help="table format"
    )
    common.add_argument("--cache", type=Path, help="sieve cache file")
    common.add_argument("--workers", type=int, help="worker processes")
    common.add_argument("--tol", type=float, help="quadrature tolerance")
    common.add_argument("--verbose", action="store_true", help="extra comparison columns")
    common.add_argument(
        "--log-level",
        dest="log_level",
        choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"],
    )
    common.add_argument("--metrics-file", type=Path, dest="metrics_file")
    common.add_argument("--pairs", action="store_true", help="list pairs (N <= 10^4)")
    common.add_argument("--list-arcs", action="store_true", dest="list_arcs")
    common.add_argument("--n", type=int, help="single N for series, arcs and probes")
    common.add_argument("--grid", type=int, help="grid size M for grid probes")
    common.add_argument("--samples", type=int, help="minor-arc sample count")
    common.add_argument("--seed", type=int, help="random seed")
    common.add_argument("--eps", type=float, help="epsilon in the minor-arc envelope")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog="goldbach-lab",
        description="Exact Goldbach counts checked against circle-method predictions.",
    )
    commands = parser.add_subparsers(dest="command", required=True)
    commands.add_parser("sieve", parents=[common], help="build or load the prime sieve")
    commands.add_parser("count", parents=[common], help="exact representation counts")
    commands.add_parser("compare", parents=[common], help="counts against predictions")
    commands.add_parser("series", parents=[common], help="all singular-series variants at --n")
    commands.add_parser("arcs", parents=[common], help="major-arc dissection at --n")
    probe = commands.add_parser("probe", parents=[common], help="run a numerical probe")
    probe.add_argument("which", choices=sorted(PROBES))
    return parser


def build_run_config(args: argparse.Namespace, settings: Settings) -> RunConfig:
    """Overlay explicit flags on settings-derived defaults."""
    values: dict[str, object] = {
        "limit": settings.SIEVE_LIMIT,
        "trunc_p": settings.TRUNCATION_P,
        "trunc_q": settings.TRUNCATION_Q,
        "tau_c": settings.TAU_EXPONENT,
        "lemma3_tau_c": settings.LEMMA3_TAU_EXPONENT,
        "tol": settings.QUADRATURE_TOL,
        "workers": settings.WORKERS,
        "seed": settings.RANDOM_SEED,
    }
    flags = {
        name: getattr(args, name)
        for name in (
            "limit",
            "n_min",
            "n_max",
            "step",
            "mode",
            "variants",
            "trunc_p",
            "trunc_q",
            "tol",
            "output_format",
            "cache",
            "workers",
            "seed",
            "n",
            "grid",
            "samples",
            "eps",
        )
    }
    values.update({name: value for name, value in flags.items() if value is not None})
    if args.tau_c is not None:
        values["tau_c"] = values["lemma3_tau_c"] = args.tau_c
    values.update(verbose=args.verbose, pairs=args.pairs, list_arcs=args.list_arcs)
    return RunConfig(**values)  # type: ignore[arg-type]


def _dispatch(command: str, config: RunConfig, args: argparse.Namespace) -> int:
    if command == "sieve":
        return cmd_sieve(config)
    if command == "count":
        return cmd_count(config)
    if command == "compare":
        return cmd_compare(config)
    if command == "series":
        return cmd_series(config)
    if command == "arcs":
        return cmd_arcs(config)
    return cmd_probe(config, args.which)


def main(argv: Sequence[str] | None = None) -> int:
    """
    Run one subcommand.

    Returns:
        0 on success, 1 on a failed hard check or numerical/arc/cache error,
        2 on invalid usage or a violated precondition
    """
    parser = build_parser()
    args = parser.parse_args(argv)

    try:
        settings = load_settings(args.config)
    except ValidationError as e:
        print(f"error: invalid settings: {e}", file=sys.stderr)
        return EXIT_USAGE
    configure_logging(args.log_level or settings.LOG_LEVEL, settings.DEBUG)
    bind_command(args.command)
    metrics_file = args.metrics_file or settings.METRICS_FILE

    started = time.perf_counter()
    try:
        config = build_run_config(args, settings)
        code = _dispatch(args.command, config, args)
    except ValidationError as e:
        print(f"error: invalid configuration: {e}", file=sys.stderr)
        code = EXIT_USAGE
    except DomainError as e:
        logger.error("command_rejected", error=str(e))
        print(f"error: {e}", file=sys.stderr)
        code = EXIT_USAGE
    except GoldbachLabError as e:
        logger.error("command_failed", error=str(e), error_type=type(e).__name__)
        print(f"error: {e}", file=sys.stderr)
        code = EXIT_FAILURE

    cli_commands_total.labels(command=args.command, exit_status=str(code)).inc()
    cli_command_duration_seconds.labels(command=args.command).observe(
        time.perf_counter() - started
    )
    if metrics_file is not None:
        write_metrics(metrics_file)
    return code


if __name__ == "__main__":
    sys.exit(main())
