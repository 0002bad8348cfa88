from typing import Callable, Dict, Optional

from src.core import config
from src.core.logger import get_logger
from src.storage.base import StorageClient
from src.storage.file_storage import FileStorageClient
from src.storage.memory import InMemoryStorageClient

logger = get_logger(__name__)

STORAGE_BUILDERS: Dict[str, Callable[[], StorageClient]] = {
    "file": lambda: FileStorageClient(base_dir=config.IDCODE_OUTPUT_DIR),
    "memory": InMemoryStorageClient,
}


class StorageFactory:
    """Хранилище артефактов по имени типа (STORAGE_TYPE по умолчанию)"""

    def __init__(self, storage_type: Optional[str] = None):
        self.storage_type = storage_type or config.STORAGE_TYPE

    def create_storage(self) -> StorageClient:
        builder = STORAGE_BUILDERS.get(self.storage_type)
        if builder is None:
            known = ", ".join(sorted(STORAGE_BUILDERS))
            raise ValueError(f"Unknown storage type {self.storage_type!r}, expected one of: {known}")
        logger.debug(f"Using {self.storage_type} storage")
        return builder()
