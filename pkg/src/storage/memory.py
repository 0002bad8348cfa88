from typing import Dict

from src.core.exceptions import StorageError
from src.core.logger import get_logger
from src.storage.base import StorageClient

logger = get_logger(__name__)


class InMemoryStorageClient(StorageClient):
    """
    Хранилище в оперативной памяти.
    Подходит для тестов; данные теряются при завершении процесса.
    """

    def __init__(self):
        self._data: Dict[str, str] = {}
        logger.debug("InMemoryStorageClient initialized")

    async def read_text(self, key: str) -> str:
        if key not in self._data:
            raise StorageError(f"key not found: {key}")
        return self._data[key]

    async def write_text(self, key: str, text: str) -> None:
        self._data[key] = text
        logger.debug(f"Saved {len(text)} characters under {key}")

    async def exists(self, key: str) -> bool:
        return key in self._data
