#  Модуль для работы с файлами: атомарная запись через временный файл
import os
import uuid

import aiofiles
import aiofiles.os

from src.core.exceptions import StorageError
from src.core.logger import get_logger
from src.storage.base import StorageClient

logger = get_logger(__name__)


class FileStorageClient(StorageClient):
    """Хранилище в файловой системе; относительные ключи считаются от base_dir"""

    def __init__(self, base_dir: str = "."):
        self.base_dir = base_dir
        logger.debug(f"FileStorageClient initialized with base dir: {base_dir}")

    def _path(self, key: str) -> str:
        return key if os.path.isabs(key) else os.path.join(self.base_dir, key)

    async def read_text(self, key: str) -> str:
        path = self._path(key)
        try:
            async with aiofiles.open(path, "r", encoding="utf-8") as f:
                content = await f.read()
            logger.debug(f"Read {len(content)} characters from {path}")
            return content

        except FileNotFoundError:
            raise StorageError(f"file not found: {path}")

        except OSError as e:
            logger.error(f"Error reading file {path}: {e}")
            raise StorageError(f"cannot read {path}: {e}")

    async def write_text(self, key: str, text: str) -> None:
        """Пишет во временный файл рядом с целью и атомарно подменяет её"""
        path = self._path(key)
        directory = os.path.dirname(path) or "."
        tmp_path = os.path.join(directory, f".{os.path.basename(path)}.{uuid.uuid4().hex}.tmp")
        try:
            await aiofiles.os.makedirs(directory, exist_ok=True)
            async with aiofiles.open(tmp_path, "w", encoding="utf-8") as f:
                await f.write(text)
            await aiofiles.os.replace(tmp_path, path)
            logger.info(f"Saved {len(text)} characters to {path}")

        except OSError as e:
            logger.error(f"Error saving file {path}: {e}")
            if await aiofiles.os.path.exists(tmp_path):
                await aiofiles.os.remove(tmp_path)
            raise StorageError(f"cannot write {path}: {e}")

    async def exists(self, key: str) -> bool:
        return await aiofiles.os.path.exists(self._path(key))
