import argparse
import time

from prometheus_client import CollectorRegistry, Counter, Gauge, Histogram, write_to_textfile

from src.core.logger import get_logger
from src.middleware import CommandHandler

logger = get_logger(__name__)

REGISTRY = CollectorRegistry()  # собственный реестр: выгружается в файл по --metrics-out

COMMAND_COUNT = Counter(
    "idcode_commands_total",
    "Total number of CLI commands",
    ["command", "exit_code"],
    registry=REGISTRY,
)

COMMAND_LATENCY = Histogram(
    "idcode_command_duration_seconds",
    "Duration of CLI commands in seconds",
    ["command"],
    buckets=[0.1, 0.5, 1.0, 5.0, 30.0, 120.0, 600.0],
    registry=REGISTRY,
)

COMMANDS_IN_PROGRESS = Gauge(
    "idcode_commands_in_progress",
    "Number of CLI commands currently running",
    ["command"],
    registry=REGISTRY,
)

CONSTRUCTOR_RUNS = Counter(
    "idcode_constructor_runs_total",
    "Randomized constructor runs",
    ["method", "outcome"],
    registry=REGISTRY,
)

SOLVER_RUNS = Counter(
    "idcode_solver_runs_total",
    "Solver runs",
    ["method", "outcome"],
    registry=REGISTRY,
)

SOLVER_NODES = Counter(
    "idcode_solver_nodes_total",
    "Branch-and-bound nodes explored",
    ["method"],
    registry=REGISTRY,
)

TRIAL_DURATION = Histogram(
    "idcode_trial_duration_seconds",
    "Duration of experiment trials in seconds",
    ["experiment"],
    buckets=[0.01, 0.1, 0.5, 1.0, 5.0, 30.0, 120.0],
    registry=REGISTRY,
)


async def metrics_middleware(command: str, args: argparse.Namespace, call_next: CommandHandler) -> int:
    """Собирает метрики команды; при --metrics-out выгружает реестр в textfile-формате"""

    COMMANDS_IN_PROGRESS.labels(command=command).inc()
    start_time = time.monotonic()
    exit_code = 1
    try:
        exit_code = await call_next(args)
        return exit_code

    finally:
        COMMAND_COUNT.labels(command=command, exit_code=str(exit_code)).inc()
        COMMAND_LATENCY.labels(command=command).observe(time.monotonic() - start_time)
        COMMANDS_IN_PROGRESS.labels(command=command).dec()
        metrics_out = getattr(args, "metrics_out", None)
        if metrics_out:
            export_metrics(metrics_out)


def export_metrics(path: str) -> None:
    """Пишет реестр в файл для node_exporter textfile collector"""
    try:
        write_to_textfile(path, REGISTRY)
        logger.info(f"Metrics written to {path}")
    except OSError as e:
        logger.error(f"Error writing metrics to {path}: {e}")
