from typing import Optional

from src.core.logger import get_logger
from src.repositories.report_repository import ReportRepository
from src.services.code_service import CodeService
from src.services.experiment_service import ExperimentService
from src.storage.base import StorageClient
from src.storage.factory import StorageFactory

logger = get_logger(__name__)


def get_storage_client(storage_type: Optional[str] = None) -> StorageClient:
    """Создает клиент хранилища по STORAGE_TYPE"""
    try:
        return StorageFactory(storage_type).create_storage()
    except ValueError as e:
        logger.error(f"Storage creation failed: {e}, falling back to file storage")
        return StorageFactory("file").create_storage()


def get_report_repository(storage_client: Optional[StorageClient] = None) -> ReportRepository:
    """Создает репозиторий артефактов"""
    return ReportRepository(storage_client=storage_client or get_storage_client())


def get_code_service() -> CodeService:
    return CodeService()


def get_experiment_service(workers: Optional[int] = None) -> ExperimentService:
    """Создает сервис экспериментов; число воркеров ограничено IDCODE_THREADS"""
    return ExperimentService(workers=workers)
