import pytest
from unittest.mock import AsyncMock
from typing import List

from src.domain.corpus import CorpusEntry, corpus_enumerate
from src.domain.extremal import construct_c1
from src.domain.entities import ExtremalInstance
from src.domain.generators import named_graph, named_multigraph
from src.domain.graph import Graph
from src.repositories.report_repository import ReportRepository
from src.services.code_service import CodeService
from src.services.experiment_service import ExperimentService
from src.storage.base import StorageClient
from src.storage.memory import InMemoryStorageClient


P3_EDGE_LIST = "# path 0-1-2\n3 2\n0 1\n1 2\n"


@pytest.fixture
def p3() -> Graph:
    """Путь 0-1-2"""
    return named_graph("path:3")


@pytest.fixture
def k2() -> Graph:
    """Одно ребро: пара близнецов"""
    return Graph(2, [(0, 1)])


@pytest.fixture
def c5() -> Graph:
    return named_graph("cycle:5")


@pytest.fixture
def k33() -> Graph:
    """K_{3,3}: доли {0, 1, 2} и {3, 4, 5}"""
    return named_graph("bipartite:3")


@pytest.fixture
def petersen() -> Graph:
    return named_graph("petersen")


@pytest.fixture
def c1_q3() -> ExtremalInstance:
    """C1 над 3-кубом: 32 вершины, 24 вынужденные"""
    return construct_c1(named_multigraph("hypercube:3"))


@pytest.fixture(scope="session")
def small_corpus() -> List[CorpusEntry]:
    """Связные графы порядка до 6 (1 + 1 + 2 + 6 + 21 + 112 штук)"""
    return list(corpus_enumerate(6))


@pytest.fixture(scope="session")
def twin_free_corpus(small_corpus: List[CorpusEntry]) -> List[Graph]:
    """Графы корпуса без близнецов и без изолированных вершин"""
    return [entry.graph for entry in small_corpus if entry.twin_free and entry.graph.n > 1]


@pytest.fixture(scope="session")
def corpus_7() -> List[CorpusEntry]:
    """Связные графы порядка до 7 (996 штук); только для тестов с меткой slow"""
    return list(corpus_enumerate(7))


@pytest.fixture(scope="session")
def twin_free_corpus_7(corpus_7: List[CorpusEntry]) -> List[Graph]:
    return [entry.graph for entry in corpus_7 if entry.twin_free and entry.graph.n > 1]


@pytest.fixture
def mock_storage_client() -> AsyncMock:
    """Создает мок StorageClient для тестов без файловой системы"""
    mock = AsyncMock(spec=StorageClient)
    mock.read_text.return_value = P3_EDGE_LIST
    mock.write_text.return_value = None
    mock.exists.return_value = True
    return mock


@pytest.fixture
def in_memory_storage() -> InMemoryStorageClient:
    """Создает реальное in-memory хранилище для интеграционных тестов"""
    return InMemoryStorageClient()


@pytest.fixture
def report_repository(mock_storage_client: AsyncMock) -> ReportRepository:
    """Создает ReportRepository с мок-хранилищем для unit тестов"""
    return ReportRepository(storage_client=mock_storage_client)


@pytest.fixture
def report_repository_real_storage(in_memory_storage: InMemoryStorageClient) -> ReportRepository:
    """Создает ReportRepository с реальным in-memory хранилищем"""
    return ReportRepository(storage_client=in_memory_storage)


@pytest.fixture
def code_service() -> CodeService:
    return CodeService()


@pytest.fixture
def experiment_service() -> ExperimentService:
    """Один воркер: испытания выполняются в текущем процессе"""
    return ExperimentService(workers=1)
