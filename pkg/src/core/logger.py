"""Структурированные логи команд; run_id текущей команды попадает в каждую строку"""

import logging
import sys
from contextvars import ContextVar
from typing import List, Optional

import structlog

from src.core import config

run_id_var: ContextVar[str] = ContextVar("run_id", default="")


def _processors(dev: bool) -> List:
    renderer = structlog.dev.ConsoleRenderer() if dev else structlog.processors.JSONRenderer()
    return [
        structlog.contextvars.merge_contextvars,
        structlog.processors.add_log_level,
        structlog.processors.TimeStamper(fmt="iso", utc=True),
        structlog.processors.format_exc_info,
        renderer,
    ]


def setup_logging(level: Optional[str] = None) -> None:
    """Уровень из аргумента или LOG_LEVEL; ENV=dev - читаемый вывод, иначе JSON"""
    numeric_level = getattr(logging, (level or config.LOG_LEVEL).upper(), logging.INFO)
    structlog.configure(
        processors=_processors(config.ENV == "dev"),
        wrapper_class=structlog.make_filtering_bound_logger(numeric_level),
        logger_factory=structlog.PrintLoggerFactory(file=sys.stderr),  # stdout занят JSON-выводом команд
        cache_logger_on_first_use=False,
    )


def get_logger(name: Optional[str] = None) -> structlog.BoundLogger:
    """Логгер модуля, обычно get_logger(__name__)"""
    return structlog.get_logger(name or __name__)


def set_run_id(run_id: str) -> None:
    run_id_var.set(run_id)
    structlog.contextvars.bind_contextvars(run_id=run_id)


def get_run_id() -> str:
    return run_id_var.get()


setup_logging()
