"""Prometheus metrics for monitoring laboratory runs."""

from pathlib import Path

from prometheus_client import CollectorRegistry, Counter, Histogram, write_to_textfile

registry = CollectorRegistry()

# Sieve metrics
sieve_build_duration_seconds = Histogram(
    "sieve_build_duration_seconds",
    "Prime sieve construction duration in seconds",
    buckets=[0.01, 0.05, 0.1, 0.5, 1, 5, 30],
    registry=registry,
)

sieve_cache_operations_total = Counter(
    "sieve_cache_operations_total",
    "Sieve cache reads and writes",
    ["operation", "status"],
    registry=registry,
)

# Goldbach counting metrics
convolution_duration_seconds = Histogram(
    "convolution_duration_seconds",
    "Goldbach range counting duration in seconds",
    ["method"],
    buckets=[0.01, 0.1, 0.5, 1, 5, 30, 120],
    registry=registry,
)

convolution_verifications_total = Counter(
    "convolution_verifications_total",
    "Transform counts re-checked against the exact scan",
    ["status"],
    registry=registry,
)

# Circle-method metrics
quadrature_panels_total = Counter(
    "quadrature_panels_total",
    "Gauss-Legendre panels accepted by adaptive quadrature",
    registry=registry,
)

orthogonality_checks_total = Counter(
    "orthogonality_checks_total",
    "Discrete-orthogonality representation counts",
    ["status"],
    registry=registry,
)

# CLI metrics
probe_runs_total = Counter(
    "probe_runs_total",
    "Probe executions",
    ["probe", "status"],
    registry=registry,
)

cli_commands_total = Counter(
    "cli_commands_total",
    "CLI command executions",
    ["command", "exit_status"],
    registry=registry,
)

cli_command_duration_seconds = Histogram(
    "cli_command_duration_seconds",
    "CLI command duration in seconds",
    ["command"],
    buckets=[0.1, 1, 5, 30, 120, 600],
    registry=registry,
)


def write_metrics(path: Path) -> None:
    """Dump the registry in Prometheus text format."""
    write_to_textfile(str(path), registry)
