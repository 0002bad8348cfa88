"""Настройки приложения из переменных окружения (.env поддерживается)"""

import os
import sys

from dotenv import load_dotenv

load_dotenv()


def _int_env(name: str, default: int) -> int:
    """Читает целое число из окружения, при ошибке возвращает значение по умолчанию"""
    raw = os.getenv(name)
    if raw is None or not raw.strip():
        return default
    try:
        return int(raw)
    except ValueError:
        # логгер здесь не импортируем: logger сам зависит от этого модуля
        print(f"warning: {name}={raw!r} is not an integer, using {default}", file=sys.stderr)
        return default


ENV = os.getenv("ENV", "dev")
LOG_LEVEL = os.getenv("LOG_LEVEL", "INFO").upper()

IDCODE_THREADS = max(1, _int_env("IDCODE_THREADS", os.cpu_count() or 1))  # потолок числа воркеров экспериментов
IDCODE_WITNESS_CAP = max(1, _int_env("IDCODE_WITNESS_CAP", 32))
IDCODE_SOLVER_BUDGET = float(_int_env("IDCODE_SOLVER_BUDGET", 60))  # секунды

STORAGE_TYPE = os.getenv("STORAGE_TYPE", "file")
IDCODE_OUTPUT_DIR = os.getenv("IDCODE_OUTPUT_DIR", ".")

REPORT_SCHEMA_VERSION = 1
