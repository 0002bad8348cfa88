import argparse
import time
import uuid

from src.core.logger import get_logger, set_run_id
from src.middleware import CommandHandler

logger = get_logger(__name__)

SLOW_COMMAND_SECONDS = 60.0


async def logging_middleware(command: str, args: argparse.Namespace, call_next: CommandHandler) -> int:
    """Назначает run_id команде и логирует её начало, завершение и длительность"""

    run_id = str(uuid.uuid4())[:8]  # короткий идентификатор запуска
    set_run_id(run_id)

    options = {k: v for k, v in vars(args).items() if k != "handler" and v is not None}
    logger.info(f"Command started: {command}", options=options)

    start_time = time.monotonic()
    try:
        exit_code = await call_next(args)
        duration = time.monotonic() - start_time
        logger.info(f"Command completed: {command} -> {exit_code}",
                    duration_ms=round(duration * 1000, 2))
        if duration > SLOW_COMMAND_SECONDS:
            logger.warning(f"Slow command detected: {duration:.2f}s")
        return exit_code

    except Exception as e:
        duration = time.monotonic() - start_time
        logger.error(f"Command failed: {command} -> ERROR", error=str(e), error_type=type(e).__name__,
                     duration_ms=round(duration * 1000, 2))
        raise  # перебрасываем для error_handling_middleware
