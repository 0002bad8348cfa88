"""
Текстовый формат списка рёбер: строки-комментарии с '#', первая значащая
строка "n m", затем m строк "u v" с вершинами 0..n-1. Для мультиграфа
повтор строки означает кратное ребро.
"""

from typing import List, Optional, Tuple, Union

from src.core.exceptions import GraphFormatError
from src.domain.exceptions import InvalidGraphError
from src.domain.graph import Edge, Graph, MultiGraph


def _significant_lines(text: str) -> List[Tuple[int, str]]:
    lines = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            lines.append((number, line))
    return lines


def _pair(number: int, line: str) -> Tuple[int, int]:
    parts = line.split()
    if len(parts) != 2:
        raise GraphFormatError(f"line {number}: expected two integers, got {line!r}")
    try:
        return int(parts[0]), int(parts[1])
    except ValueError:
        raise GraphFormatError(f"line {number}: expected two integers, got {line!r}")


def parse_edges(text: str) -> Tuple[int, List[Edge]]:
    lines = _significant_lines(text)
    if not lines:
        raise GraphFormatError("empty edge list: missing 'n m' header")
    n, m = _pair(*lines[0])
    if n < 0 or m < 0:
        raise GraphFormatError(f"line {lines[0][0]}: negative header values")
    edges = [_pair(number, line) for number, line in lines[1:]]
    if len(edges) != m:
        raise GraphFormatError(f"header declares {m} edges, found {len(edges)}")
    return n, edges


def parse_graph(text: str, *, allow_isolated: bool = False) -> Graph:
    n, edges = parse_edges(text)
    try:
        return Graph(n, edges, allow_isolated=allow_isolated)
    except InvalidGraphError as e:
        raise GraphFormatError(f"invalid graph: {e}")


def parse_multigraph(text: str) -> MultiGraph:
    n, edges = parse_edges(text)
    try:
        return MultiGraph(n, edges)
    except InvalidGraphError as e:
        raise GraphFormatError(f"invalid multigraph: {e}")


def format_edge_list(graph: Union[Graph, MultiGraph], comment: Optional[str] = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {row}" for row in comment.splitlines())
    lines.append(f"{graph.n} {len(graph.edges)}")
    lines.extend(f"{u} {v}" for u, v in graph.edges)
    return "\n".join(lines) + "\n"
