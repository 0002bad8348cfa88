"""
Корпус всех связных графов малого порядка с точностью до изоморфизма.

Любой связный граф на n вершинах получается из связного графа на n-1
вершинах добавлением вершины (удаляем не разрезающую вершину), поэтому
порядок n строится расширением порядка n-1 на все непустые подмножества
соседей. Дубликаты отсекаются хешем Вейсфейлера-Лемана и проверкой изоморфизма.
"""

from dataclasses import dataclass
from itertools import combinations
from typing import Dict, Iterator, List

import networkx as nx

from src.core.logger import get_logger
from src.domain.exceptions import CorpusCapExceededError
from src.domain.graph import Graph, is_twin_free

logger = get_logger(__name__)

CORPUS_MAX_ORDER = 8


@dataclass(frozen=True)
class CorpusEntry:
    graph: Graph
    twin_free: bool


class IsomorphismCatalog:
    """Хранилище попарно неизоморфных графов, разложенных по WL-хешу"""

    def __init__(self):
        self._buckets: Dict[str, List[nx.Graph]] = {}
        self.graphs: List[nx.Graph] = []

    def add_if_new(self, g: nx.Graph) -> bool:
        key = nx.weisfeiler_lehman_graph_hash(g)
        bucket = self._buckets.setdefault(key, [])
        if any(nx.is_isomorphic(g, known) for known in bucket):
            return False
        bucket.append(g)
        self.graphs.append(g)
        return True

    def __len__(self) -> int:
        return len(self.graphs)


def _extend(previous: List[nx.Graph], n: int) -> List[nx.Graph]:
    catalog = IsomorphismCatalog()
    new_vertex = n - 1
    for base in previous:
        for size in range(1, n):
            for neighbours in combinations(range(n - 1), size):
                g = base.copy()
                g.add_node(new_vertex)
                g.add_edges_from((new_vertex, u) for u in neighbours)
                catalog.add_if_new(g)
    return catalog.graphs


def corpus_enumerate(max_n: int) -> Iterator[CorpusEntry]:
    """Связные графы порядков 1..max_n, по возрастанию порядка"""
    if max_n > CORPUS_MAX_ORDER:
        raise CorpusCapExceededError(f"corpus order is capped at {CORPUS_MAX_ORDER}, got {max_n}")
    if max_n < 1:
        return

    level = [nx.empty_graph(1)]
    for n in range(1, max_n + 1):
        if n > 1:
            level = _extend(level, n)
        logger.debug(f"Corpus order {n}: {len(level)} connected graphs")
        for g in level:
            graph = Graph(n, g.edges(), allow_isolated=(n == 1))
            yield CorpusEntry(graph=graph, twin_free=is_twin_free(graph))
