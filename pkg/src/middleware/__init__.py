"""Обёртки команд CLI: обработка ошибок, логирование, метрики"""

import argparse
from typing import Awaitable, Callable

CommandHandler = Callable[[argparse.Namespace], Awaitable[int]]
Middleware = Callable[[str, argparse.Namespace, CommandHandler], Awaitable[int]]
