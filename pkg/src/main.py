import asyncio
import sys
from typing import List, Optional

from src.controllers.cli_controller import build_parser
from src.core.logger import get_logger, setup_logging
from src.middleware import CommandHandler, Middleware
from src.middleware.error_handling import error_handling_middleware
from src.middleware.logging_middleware import logging_middleware
from src.middleware.metrics import metrics_middleware

logger = get_logger(__name__)

# внешний слой первым: ошибки -> логирование -> метрики -> обработчик
MIDDLEWARES: List[Middleware] = [error_handling_middleware, logging_middleware, metrics_middleware]


def _wrap(middleware: Middleware, command: str, call_next: CommandHandler) -> CommandHandler:
    async def call(args):
        return await middleware(command, args, call_next)
    return call


def create_pipeline(command: str, handler: CommandHandler) -> CommandHandler:
    """Оборачивает обработчик команды в цепочку middleware"""
    pipeline = handler
    for middleware in reversed(MIDDLEWARES):
        pipeline = _wrap(middleware, command, pipeline)
    return pipeline


async def run(argv: Optional[List[str]] = None) -> int:
    """Разбор аргументов и запуск команды; ошибки использования дают код 2"""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2

    if args.log_level:
        setup_logging(args.log_level)

    pipeline = create_pipeline(args.command_name, args.handler)
    return await pipeline(args)


def main() -> None:
    """Точка входа консольной команды idcode"""
    sys.exit(asyncio.run(run(sys.argv[1:])))


if __name__ == "__main__":
    main()
