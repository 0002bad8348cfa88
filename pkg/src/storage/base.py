from abc import ABC, abstractmethod


class StorageClient(ABC):
    """
    Абстрактный интерфейс хранилища артефактов (графы, отчёты, таблицы).
    Ключ - относительный или абсолютный путь; содержимое - текст.
    """

    @abstractmethod
    async def read_text(self, key: str) -> str:
        """Читает текст по ключу; StorageError, если ключа нет"""
        pass

    @abstractmethod
    async def write_text(self, key: str, text: str) -> None:
        """Записывает текст по ключу (полная перезапись)"""
        pass

    @abstractmethod
    async def exists(self, key: str) -> bool:
        """Проверяет наличие ключа"""
        pass
