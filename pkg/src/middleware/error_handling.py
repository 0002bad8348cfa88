import argparse
import sys
import traceback
from typing import Optional, TextIO

from src.core.exceptions import AppValidationError, GraphFormatError, StorageError
from src.core.logger import get_logger, get_run_id
from src.domain.exceptions import (BudgetExceededError, CorpusCapExceededError, DomainViolationError,
                                   GirthTooSmallError, InvalidGraphError, InvalidVertexError,
                                   MinDegreeTooSmallError, SamplingExhaustedError, TwinsPresentError)
from src.middleware import CommandHandler
from src.models.reports import ErrorDetail, ErrorResponse

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_DOMAIN_ERROR = 1
EXIT_USAGE = 2

# порядок важен: подклассы раньше базовых классов
ERROR_CODES = [
    (TwinsPresentError, "TWINS_PRESENT"),
    (GirthTooSmallError, "GIRTH_TOO_SMALL"),
    (MinDegreeTooSmallError, "MIN_DEGREE_TOO_SMALL"),
    (BudgetExceededError, "BUDGET_EXCEEDED"),
    (SamplingExhaustedError, "SAMPLING_EXHAUSTED"),
    (CorpusCapExceededError, "CORPUS_CAP_EXCEEDED"),
    (DomainViolationError, "DOMAIN_VIOLATION"),
    (InvalidVertexError, "INVALID_VERTEX"),
    (InvalidGraphError, "INVALID_GRAPH"),
    (GraphFormatError, "GRAPH_FORMAT"),
    (AppValidationError, "INVALID_ARGUMENTS"),
    (StorageError, "STORAGE_ERROR"),
]


def error_code_for(exc: BaseException) -> str:
    for exc_type, code in ERROR_CODES:
        if isinstance(exc, exc_type):
            return code
    return "INTERNAL_ERROR"


def write_error(code: str, message: str, command: Optional[str], stream: Optional[TextIO] = None) -> None:
    """Пишет {"error": {...}} одной строкой в stderr"""
    response = ErrorResponse(error=ErrorDetail(code=code, message=message,
                                               run_id=get_run_id(), command=command))
    print(response.model_dump_json(), file=stream or sys.stderr)


async def error_handling_middleware(command: str, args: argparse.Namespace, call_next: CommandHandler) -> int:
    """Централизованная обработка ошибок: исключение -> код выхода и JSON-причина"""
    try:
        return await call_next(args)

    except tuple(exc_type for exc_type, _ in ERROR_CODES) as e:
        code = error_code_for(e)
        logger.warning(f"Command {command} failed with {code}: {e}")
        write_error(code, str(e), command)
        return EXIT_USAGE if isinstance(e, AppValidationError) else EXIT_DOMAIN_ERROR

    except Exception as e:
        logger.error(f"Unexpected error in {command}: {e}", traceback=traceback.format_exc())
        write_error("INTERNAL_ERROR", "An unexpected error occurred", command)
        return EXIT_DOMAIN_ERROR
