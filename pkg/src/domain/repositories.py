from abc import ABC, abstractmethod
from typing import Any, List, Optional, Sequence

from pydantic import BaseModel

from src.domain.graph import Graph, MultiGraph


class ReportRepositoryInterface(ABC):
    """Интерфейс репозитория артефактов - графы, JSON-отчёты, CSV-таблицы"""

    @abstractmethod
    async def load_graph(self, key: str, allow_isolated: bool = False) -> Graph:
        """Загрузить граф из списка рёбер"""
        pass

    @abstractmethod
    async def load_multigraph(self, key: str) -> MultiGraph:
        """Загрузить мультиграф из списка рёбер"""
        pass

    @abstractmethod
    async def save_graph(self, key: str, graph: Graph, comment: Optional[str] = None) -> None:
        """Сохранить граф списком рёбер"""
        pass

    @abstractmethod
    async def save_report(self, key: str, report: BaseModel) -> None:
        """Сохранить JSON-отчёт"""
        pass

    @abstractmethod
    async def save_table(self, key: str, header: Sequence[str], rows: List[Sequence[Any]]) -> None:
        """Сохранить таблицу в CSV"""
        pass
