import csv
import io
from typing import Any, List, Optional, Sequence

from pydantic import BaseModel

from src.core.logger import get_logger
from src.domain.graph import Graph, MultiGraph
from src.domain.repositories import ReportRepositoryInterface
from src.storage.base import StorageClient
from src.storage.edge_list import format_edge_list, parse_graph, parse_multigraph

logger = get_logger(__name__)


def render_report(report: BaseModel) -> str:
    """Стабильное JSON-представление отчёта (порядок полей фиксирован моделью)"""
    return report.model_dump_json(indent=2) + "\n"


def render_table(header: Sequence[str], rows: List[Sequence[Any]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


class ReportRepository(ReportRepositoryInterface):
    """Репозиторий артефактов поверх абстрактного хранилища"""

    def __init__(self, storage_client: StorageClient):
        self.storage = storage_client  # клиент для работы с хранилищем данных

    async def load_graph(self, key: str, allow_isolated: bool = False) -> Graph:
        logger.info(f"Loading graph from {key}")
        text = await self.storage.read_text(key)
        graph = parse_graph(text, allow_isolated=allow_isolated)
        logger.info(f"Loaded graph n={graph.n}, m={graph.m}")
        return graph

    async def load_multigraph(self, key: str) -> MultiGraph:
        logger.info(f"Loading multigraph from {key}")
        text = await self.storage.read_text(key)
        return parse_multigraph(text)

    async def save_graph(self, key: str, graph: Graph, comment: Optional[str] = None) -> None:
        await self.storage.write_text(key, format_edge_list(graph, comment))
        logger.info(f"Graph n={graph.n}, m={graph.m} saved to {key}")

    async def save_report(self, key: str, report: BaseModel) -> None:
        await self.storage.write_text(key, render_report(report))
        logger.info(f"{type(report).__name__} saved to {key}")

    async def save_table(self, key: str, header: Sequence[str], rows: List[Sequence[Any]]) -> None:
        await self.storage.write_text(key, render_table(header, rows))
        logger.info(f"Table with {len(rows)} rows saved to {key}")
